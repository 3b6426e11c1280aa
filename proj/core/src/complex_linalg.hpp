#pragma once

// Internal slice-level helpers shared by the Fourier-domain operations.

#include <complex>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace tcur::detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SvdInverse {
    Eigen::MatrixXcd inverse;
    double sigma_max = 0.0;
    double sigma_min = 0.0;

    bool singular(Eigen::Index n) const {
        return sigma_max == 0.0 || sigma_min <= sigma_max * kEps * static_cast<double>(n);
    }
};

/// SVD-based inverse of a square complex matrix with its extreme singular
/// values, so the caller can apply the condition-number cutoff.
inline SvdInverse svd_inverse(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    SvdInverse out;
    out.sigma_max = sv.size() ? sv(0) : 0.0;
    out.sigma_min = sv.size() ? sv(sv.size() - 1) : 0.0;
    if (!out.singular(m.rows())) {
        out.inverse = svd.matrixV() * sv.cwiseInverse().asDiagonal() *
                      svd.matrixU().adjoint();
    }
    return out;
}

/// Moore-Penrose pseudoinverse with singular values below
/// max(rows, cols) * eps * sigma_max zeroed. sigma_ratio, when non-null,
/// receives sigma_min / sigma_max (0 for an all-zero matrix).
inline Eigen::MatrixXcd pseudo_inverse(const Eigen::MatrixXcd& m, double* sigma_ratio = nullptr) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() ? sv(0) : 0.0;
    if (sigma_ratio)
        *sigma_ratio = (sigma_max > 0.0 && sv.size()) ? sv(sv.size() - 1) / sigma_max : 0.0;
    const double tol = static_cast<double>(std::max(m.rows(), m.cols())) * kEps * sigma_max;
    Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index t = 0; t < sv.size(); ++t)
        if (sv(t) > tol) inv_sv(t) = 1.0 / sv(t);
    return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
}

/// Spectral norm (largest singular value).
inline double spectral_norm(const Eigen::MatrixXcd& m) {
    return m.jacobiSvd().singularValues()(0);
}

inline double smallest_singular_value(const Eigen::MatrixXcd& m) {
    auto sv = m.jacobiSvd().singularValues();
    return sv(sv.size() - 1);
}

} // namespace tcur::detail
