#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "tcur/index_set.hpp"
#include "tcur/tsvd.hpp"

namespace tcur {

/// DEIM row selection on a matrix basis: index j maximizes the magnitude of
/// the interpolation residual of column j against the previously selected
/// rows. Ties break to the smaller index. Throws DegeneracyError when the
/// interpolation submatrix turns singular.
IndexSet deim_matrix(const Eigen::MatrixXd& basis);

/// Tubal DEIM on a basis tensor with linearly independent lateral slices:
/// the first index maximizes the Euclidean norm of the tubes of the first
/// lateral slice; each later index maximizes the tube norm of the residual
/// lateral slice after interpolating at the rows already selected.
IndexSet tdeim(const Tensor3& basis);

/// tdeim plus the per-step residual basis: lateral slice j of `residual`
/// holds the step-j interpolation residual (slice 1 is the original first
/// slice). The hybrid sampler scores this tensor.
struct TdeimResult {
    IndexSet indices;
    Tensor3 residual;
};
TdeimResult tdeim_with_residual(const Tensor3& basis);

/// Hybrid sampler: rank indices via tdeim, then the extended_rank - rank
/// indices with the largest tubal leverage scores of the deflated residual
/// (entries at already-selected indices removed). Applied to both bases;
/// returns (horizontal indices from basis_u, lateral indices from basis_v).
std::pair<IndexSet, IndexSet> htdeim(const Tensor3& basis_u, const Tensor3& basis_v,
                                     Index rank, Index extended_rank);

/// Indices of the `count` largest scores, ties broken by smaller index.
IndexSet top_leverage(const LeverageScores& scores, Index count);

/// `count` distinct indices drawn sequentially without replacement, each
/// draw proportional to the remaining scores renormalized. Reproducible:
/// the generator is std::mt19937_64 and doubles are formed from the top 53
/// bits. Throws SamplingError when fewer than `count` scores are positive.
IndexSet leverage_sample(const LeverageScores& scores, Index count, std::uint64_t seed);

/// `count` distinct indices uniformly without replacement from 1..bound
/// (partial Fisher-Yates over std::mt19937_64 with rejection-sampled bounded
/// draws). Throws RankError when count > bound.
IndexSet uniform_sample(Index bound, Index count, std::uint64_t seed);

enum class SamplerMethod { tdeim, htdeim, top_leverage, leverage_sampling, uniform };

const char* sampler_name(SamplerMethod m);
std::optional<SamplerMethod> parse_sampler(const std::string& name);

struct SamplerConfig {
    SamplerMethod method = SamplerMethod::tdeim;
    Index rank = 1;
    Index extended_rank = 0;                 // htdeim only; 0 means rank
    std::optional<std::uint64_t> seed;       // randomized methods only
};

/// Runs the configured sampler against t-SVD factors, producing horizontal
/// indices (from U, bounded by I1) and lateral indices (from V, bounded by
/// I2). Randomized methods draw p first and q second from one generator
/// seeded with config.seed.
std::pair<IndexSet, IndexSet> select_slices(const SamplerConfig& config,
                                            const TSvdFactors& factors,
                                            Index bound_p, Index bound_q);

} // namespace tcur
