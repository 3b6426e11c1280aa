#include "tcur/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "complex_linalg.hpp"
#include "tcur/spectral.hpp"

namespace tcur {

namespace {

// Strict-greater scan, so the first occurrence of the maximum wins.
Index argmax_first(const Eigen::VectorXd& v) {
    Index arg = 0;
    double best = v(0);
    for (Index i = 1; i < v.size(); ++i)
        if (v(i) > best) {
            best = v(i);
            arg = i;
        }
    return arg;
}

// Euclidean norms of the tubes of one lateral slice (I1 x 1 x I3).
Eigen::VectorXd tube_norms(const Tensor3& lateral) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(lateral.i1());
    for (Index k = 0; k < lateral.i3(); ++k)
        for (Index i = 0; i < lateral.i1(); ++i) {
            double v = lateral(i, 0, k);
            out(i) += v * v;
        }
    return out.cwiseSqrt();
}

// 53-bit uniform double in [0, 1).
double next_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased draw from [0, n) by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t min = (-n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= min) return r % n;
    }
}

constexpr std::uint64_t kLateralSeedMix = 0x9e3779b97f4a7c15ULL;

} // namespace

IndexSet deim_matrix(const Eigen::MatrixXd& basis) {
    const Index n = basis.rows();
    const Index r = basis.cols();
    if (r < 1 || r > n)
        throw ShapeError("deim basis must be tall with at least one column");

    std::vector<Index> sel;
    sel.reserve(static_cast<size_t>(r));
    sel.push_back(argmax_first(basis.col(0).cwiseAbs()));

    for (Index j = 1; j < r; ++j) {
        Eigen::MatrixXd sub(j, j);
        Eigen::VectorXd rhs(j);
        for (Index t = 0; t < j; ++t) {
            sub.row(t) = basis.row(sel[static_cast<size_t>(t)]).head(j);
            rhs(t) = basis(sel[static_cast<size_t>(t)], j);
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        if (sv(0) == 0.0 || sv(j - 1) <= sv(0) * detail::kEps * static_cast<double>(j))
            throw DegeneracyError("deim: singular interpolation submatrix", j + 1);
        Eigen::VectorXd coeff = svd.solve(rhs);
        Eigen::VectorXd resid = basis.col(j) - basis.leftCols(j) * coeff;
        Index pick = argmax_first(resid.cwiseAbs());
        if (std::find(sel.begin(), sel.end(), pick) != sel.end())
            throw DegeneracyError("deim: residual vanished at all unsampled rows", j + 1);
        sel.push_back(pick);
    }

    std::vector<Index> one_based(sel.size());
    std::transform(sel.begin(), sel.end(), one_based.begin(), [](Index i) { return i + 1; });
    return IndexSet(std::move(one_based), n);
}

TdeimResult tdeim_with_residual(const Tensor3& basis) {
    const Index n = basis.i1();
    const Index r = basis.i2();
    const Index n3 = basis.i3();
    if (r < 1 || r > n)
        throw ShapeError("tdeim basis must have 1 <= lateral slices <= I1");

    SpectralTensor uh = fft_mode3(basis);
    const Index half = uh.half();

    Tensor3 residual(n, r, n3);
    for (Index k = 0; k < n3; ++k) residual.slice(k).col(0) = basis.slice(k).col(0);

    Tensor3 first(n, 1, n3);
    for (Index k = 0; k < n3; ++k) first.slice(k).col(0) = basis.slice(k).col(0);

    std::vector<Index> sel;
    sel.reserve(static_cast<size_t>(r));
    sel.push_back(argmax_first(tube_norms(first)));

    for (Index j = 1; j < r; ++j) {
        SpectralTensor rh(n, 1, n3, true);
        for (Index k = 0; k < half; ++k) {
            Eigen::MatrixXcd sub(j, j);
            Eigen::VectorXcd rhs(j);
            auto slice = uh.slice(k);
            for (Index t = 0; t < j; ++t) {
                sub.row(t) = slice.row(sel[static_cast<size_t>(t)]).head(j);
                rhs(t) = slice(sel[static_cast<size_t>(t)], j);
            }
            detail::SvdInverse si = detail::svd_inverse(sub);
            if (si.singular(j))
                throw DegeneracyError("tdeim: singular interpolation submatrix in spectral "
                                      "slice " + std::to_string(k + 1), j + 1);
            Eigen::VectorXcd coeff = si.inverse * rhs;
            rh.slice(k).col(0) = slice.col(j) - slice.leftCols(j) * coeff;
        }
        rh.mirror_upper();
        Tensor3 resid_slice = ifft_mode3(rh);

        for (Index k = 0; k < n3; ++k) residual.slice(k).col(j) = resid_slice.slice(k).col(0);

        Index pick = argmax_first(tube_norms(resid_slice));
        if (std::find(sel.begin(), sel.end(), pick) != sel.end())
            throw DegeneracyError("tdeim: residual tubes vanished at all unsampled rows",
                                  j + 1);
        sel.push_back(pick);
    }

    std::vector<Index> one_based(sel.size());
    std::transform(sel.begin(), sel.end(), one_based.begin(), [](Index i) { return i + 1; });
    return {IndexSet(std::move(one_based), n), std::move(residual)};
}

IndexSet tdeim(const Tensor3& basis) { return tdeim_with_residual(basis).indices; }

namespace {

IndexSet htdeim_side(const Tensor3& basis, Index rank, Index extended_rank) {
    if (extended_rank > basis.i1())
        throw RankError("extended rank " + std::to_string(extended_rank) +
                        " exceeds dimension " + std::to_string(basis.i1()));
    TdeimResult base = tdeim_with_residual(basis);
    if (extended_rank == rank) return base.indices;

    LeverageScores lv = tubal_leverage(base.residual);
    std::vector<Index> order(lv.scores.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        double sa = lv.scores[static_cast<size_t>(a)];
        double sb = lv.scores[static_cast<size_t>(b)];
        return sa != sb ? sa > sb : a < b;
    });

    IndexSet out = base.indices;
    Index needed = extended_rank - rank;
    for (Index i : order) {
        if (needed == 0) break;
        if (out.contains(i + 1)) continue;
        out.indices.push_back(i + 1);
        --needed;
    }
    out.validate();
    return out;
}

} // namespace

std::pair<IndexSet, IndexSet> htdeim(const Tensor3& basis_u, const Tensor3& basis_v,
                                     Index rank, Index extended_rank) {
    if (basis_u.i2() != rank || basis_v.i2() != rank)
        throw RankError("htdeim bases must have exactly `rank` lateral slices");
    if (extended_rank < rank)
        throw RankError("extended rank must be at least the base rank");
    return {htdeim_side(basis_u, rank, extended_rank),
            htdeim_side(basis_v, rank, extended_rank)};
}

IndexSet top_leverage(const LeverageScores& scores, Index count) {
    if (count < 1 || count > scores.size())
        throw RankError("top_leverage count outside [1, " + std::to_string(scores.size()) + "]");
    std::vector<Index> order(scores.scores.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        double sa = scores.scores[static_cast<size_t>(a)];
        double sb = scores.scores[static_cast<size_t>(b)];
        return sa != sb ? sa > sb : a < b;
    });
    std::vector<Index> sel(static_cast<size_t>(count));
    for (Index t = 0; t < count; ++t) sel[static_cast<size_t>(t)] = order[static_cast<size_t>(t)] + 1;
    return IndexSet(std::move(sel), scores.size());
}

IndexSet leverage_sample(const LeverageScores& scores, Index count, std::uint64_t seed) {
    Index positive = 0;
    for (double s : scores.scores)
        if (s > 0.0) ++positive;
    if (count > positive)
        throw SamplingError("requested " + std::to_string(count) + " draws but only " +
                            std::to_string(positive) + " indices have positive probability");

    std::mt19937_64 rng(seed);
    std::vector<double> weight = scores.scores;
    double total = std::accumulate(weight.begin(), weight.end(), 0.0);

    std::vector<Index> sel;
    sel.reserve(static_cast<size_t>(count));
    for (Index draw = 0; draw < count; ++draw) {
        double target = next_double(rng) * total;
        double cum = 0.0;
        Index pick = -1;
        for (size_t i = 0; i < weight.size(); ++i) {
            if (weight[i] <= 0.0) continue;
            cum += weight[i];
            pick = static_cast<Index>(i);
            if (cum > target) break;
        }
        sel.push_back(pick + 1);
        total -= weight[static_cast<size_t>(pick)];
        weight[static_cast<size_t>(pick)] = 0.0;
    }
    return IndexSet(std::move(sel), scores.size());
}

IndexSet uniform_sample(Index bound, Index count, std::uint64_t seed) {
    if (count < 1 || count > bound)
        throw RankError("uniform sample count outside [1, " + std::to_string(bound) + "]");
    std::mt19937_64 rng(seed);
    std::vector<Index> pool(static_cast<size_t>(bound));
    std::iota(pool.begin(), pool.end(), Index{1});
    for (Index i = 0; i < count; ++i) {
        Index j = i + static_cast<Index>(bounded(rng, static_cast<std::uint64_t>(bound - i)));
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    pool.resize(static_cast<size_t>(count));
    return IndexSet(std::move(pool), bound);
}

const char* sampler_name(SamplerMethod m) {
    switch (m) {
        case SamplerMethod::tdeim: return "tdeim";
        case SamplerMethod::htdeim: return "htdeim";
        case SamplerMethod::top_leverage: return "top_leverage";
        case SamplerMethod::leverage_sampling: return "leverage_sampling";
        case SamplerMethod::uniform: return "uniform";
    }
    return "unknown";
}

std::optional<SamplerMethod> parse_sampler(const std::string& name) {
    if (name == "tdeim") return SamplerMethod::tdeim;
    if (name == "htdeim") return SamplerMethod::htdeim;
    if (name == "top_leverage") return SamplerMethod::top_leverage;
    if (name == "leverage_sampling") return SamplerMethod::leverage_sampling;
    if (name == "uniform") return SamplerMethod::uniform;
    return std::nullopt;
}

std::pair<IndexSet, IndexSet> select_slices(const SamplerConfig& config,
                                            const TSvdFactors& factors,
                                            Index bound_p, Index bound_q) {
    const Index rank = config.rank;
    switch (config.method) {
        case SamplerMethod::tdeim:
            return {tdeim(factors.u), tdeim(factors.v)};
        case SamplerMethod::htdeim: {
            Index ext = config.extended_rank == 0 ? rank : config.extended_rank;
            return htdeim(factors.u, factors.v, rank, ext);
        }
        case SamplerMethod::top_leverage:
            return {top_leverage(tubal_leverage(factors.u), rank),
                    top_leverage(tubal_leverage(factors.v), rank)};
        case SamplerMethod::leverage_sampling: {
            std::uint64_t seed = config.seed.value_or(0);
            return {leverage_sample(tubal_leverage(factors.u), rank, seed),
                    leverage_sample(tubal_leverage(factors.v), rank, seed ^ kLateralSeedMix)};
        }
        case SamplerMethod::uniform: {
            std::uint64_t seed = config.seed.value_or(0);
            return {uniform_sample(bound_p, rank, seed),
                    uniform_sample(bound_q, rank, seed ^ kLateralSeedMix)};
        }
    }
    throw std::logic_error("unreachable sampler method");
}

} // namespace tcur
