#pragma once

#include <vector>

#include <Eigen/Core>

#include "tcur/index_set.hpp"
#include "tcur/spectral.hpp"
#include "tcur/tensor3.hpp"

namespace tcur {

/// Interpolatory oblique projector P = U * (S^T * U)^{-1} * S^T for a basis
/// tensor U and selection indices s, applied in the Fourier domain. P * G
/// reproduces the horizontal slices of G at the selected indices.
class Projector {
public:
    Tensor3 apply(const Tensor3& g) const;
    Tensor3 operator()(const Tensor3& g) const { return apply(g); }

    const IndexSet& indices() const { return s_; }

private:
    friend Projector build_projector(const Tensor3& basis, const IndexSet& s);

    SpectralTensor basis_hat_;                // leading half slices used
    std::vector<Eigen::MatrixXcd> inverses_;  // (Uhat_k(s,:))^{-1}, per half slice
    IndexSet s_;
};

/// Throws DegeneracyError (with the spectral slice index) when some
/// Uhat_i(s,:) is singular.
Projector build_projector(const Tensor3& basis, const IndexSet& s);

enum class MiddleVariant { optimal, intersection };

const char* middle_name(MiddleVariant v);

/// Sampled CUR model: C = X(:,q,:), R = X(p,:,:) and the middle tensor of
/// the chosen variant. c and r are exact gathers of the source slices.
struct CurModel {
    Tensor3 c;
    Tensor3 u_mid;
    Tensor3 r;
    IndexSet p;
    IndexSet q;
    MiddleVariant middle_variant = MiddleVariant::optimal;
    /// Intersection variant only: set when some spectral slice of X(p,q,:)
    /// had sigma_min < 1e-12 * sigma_max and the pseudoinverse truncated.
    bool intersection_near_singular = false;
};

/// Optimal middle tensor pinv(C) * X * pinv(R).
Tensor3 cur_middle_optimal(const Tensor3& x, const Tensor3& c, const Tensor3& r);

/// Interpolatory middle tensor pinv(X(p,q,:)). The residual X - C*U*R then
/// vanishes on the sampled rows and columns whenever the intersection slices
/// have full rank. near_singular, when non-null, receives the warning flag.
Tensor3 cur_middle_intersection(const Tensor3& x, const IndexSet& p, const IndexSet& q,
                                bool* near_singular = nullptr);

CurModel build_cur(const Tensor3& x, const IndexSet& p, const IndexSet& q,
                   MiddleVariant variant);

/// Reconstruction C * U * R.
Tensor3 cur_reconstruct(const CurModel& model);

/// Absolute Frobenius error ||X - C*U*R||_F.
double cur_error(const Tensor3& x, const CurModel& model);

/// Error constants of the tubal CUR bound:
///   eta_p = (1/I3) * max_i ||(Shat_i^T Uhat_i)^{-1}||_2^2
///   eta_q = (1/I3) * max_i ||(Vhat_i^T Qhat_i)^{-1}||_2^2
/// The selection tensors have identical real spectral slices, so the
/// submatrices are plain row gathers of the basis spectra.
struct ErrorConstants {
    double eta_p = 0.0;
    double eta_q = 0.0;
};

/// Throws SingularSliceError when a selection submatrix is singular (the
/// constant would be infinite).
ErrorConstants error_constants(const Tensor3& basis_u, const IndexSet& p,
                               const Tensor3& basis_v, const IndexSet& q);

/// Numeric check of the CUR error bound (optimal middle) and of the
/// projector bound. All quantities are squared Frobenius norms; tail_sq is
/// sum_i sum_{t>R} sigma_t(Xhat_i)^2 from full per-slice SVDs.
struct BoundReport {
    double theorem_lhs = 0.0;    // ||X - C*U*R||_F^2
    double theorem_rhs = 0.0;    // (eta_p + eta_q) * tail_sq
    double projector_lhs = 0.0;  // ||X - P*X||_F^2
    double projector_rhs = 0.0;  // eta_p * tail_sq
    double eta_p = 0.0;
    double eta_q = 0.0;
    double tail_sq = 0.0;
    bool theorem_pass = false;
    bool projector_pass = false;
};

/// Requires a model built with the optimal middle variant and |p| == |q|.
/// The projector uses the leading-|p| left singular lateral slices of x.
BoundReport verify_bound(const Tensor3& x, const CurModel& model,
                         const ErrorConstants& constants);

} // namespace tcur
