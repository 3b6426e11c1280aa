#pragma once

#include <vector>

#include <Eigen/Core>

#include "tcur/tensor3.hpp"

namespace tcur {

/// Truncated t-SVD factors X ~ U * S * V^T with orthogonal U (I1 x R x I3),
/// f-diagonal S (R x R x I3) and orthogonal V (I2 x R x I3).
struct TSvdFactors {
    Tensor3 u;
    Tensor3 s;
    Tensor3 v;
    Index rank = 0;
};

/// Truncated t-SVD: per-spectral-slice SVD of the first ceil((I3+1)/2)
/// slices, mirrored by conjugation (U, V) and copy (S). Deterministic: each
/// spectral left singular vector is phase-rotated so its largest-magnitude
/// entry is real positive, with the matching rotation applied to the right
/// vector. Throws RankError unless 1 <= rank <= min(I1, I2).
TSvdFactors truncated_tsvd(const Tensor3& x, Index rank);

/// Nested truncation of already computed factors to a smaller rank.
/// Identical to truncated_tsvd(x, rank) thanks to the per-vector phase fix.
TSvdFactors truncate(const TSvdFactors& f, Index rank);

/// Reconstruction U * S * V^T.
Tensor3 tsvd_reconstruct(const TSvdFactors& f);

/// Singular values of every spectral frontal slice of x (all I3 slices,
/// conjugate pairs share values). Used for tail sums in error bounds.
std::vector<Eigen::VectorXd> slice_singular_values(const Tensor3& x);

/// Tubal leverage scores of the horizontal slices of an orthogonal basis
/// tensor: scores[i] = ||basis(i,:,:)||_F^2, rank = number of lateral slices.
/// For a t-SVD basis the scores sum to the rank and P_i = scores[i]/rank is
/// a probability distribution.
struct LeverageScores {
    std::vector<double> scores;
    Index rank = 0;

    Index size() const { return static_cast<Index>(scores.size()); }
};

LeverageScores tubal_leverage(const Tensor3& basis);

} // namespace tcur
