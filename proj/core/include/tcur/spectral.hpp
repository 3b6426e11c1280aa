#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "tcur/tensor3.hpp"

namespace tcur {

/// Mode-3 DFT of a third-order tensor: a stack of I3 complex I1 x I2 frontal
/// slices, stored contiguously (column-major within a slice, slices in order).
/// `real_origin` asserts the stack came from a real tensor, so slice k is the
/// elementwise conjugate of slice I3-k (0-based, k >= 1) and only the first
/// ceil((I3+1)/2) slices carry independent information.
class SpectralTensor {
public:
    SpectralTensor() = default;
    SpectralTensor(Index i1, Index i2, Index i3, bool real_origin);

    Index i1() const { return i1_; }
    Index i2() const { return i2_; }
    Index i3() const { return i3_; }

    bool real_origin() const { return real_origin_; }
    void set_real_origin(bool v) { real_origin_ = v; }

    /// Number of leading slices that must be processed when the conjugate
    /// symmetry shortcut applies: ceil((I3+1)/2).
    static Index half_slices(Index i3) { return i3 / 2 + 1; }
    Index half() const { return half_slices(i3_); }

    std::complex<double>* data() { return data_.data(); }
    const std::complex<double>* data() const { return data_.data(); }

    Eigen::Map<Eigen::MatrixXcd> slice(Index k) {
        assert(k >= 0 && k < i3_);
        return {data_.data() + k * i1_ * i2_, i1_, i2_};
    }
    Eigen::Map<const Eigen::MatrixXcd> slice(Index k) const {
        assert(k >= 0 && k < i3_);
        return {data_.data() + k * i1_ * i2_, i1_, i2_};
    }

    /// Fills slices half()..I3-1 from the leading ones: slice k becomes
    /// conj(slice I3-k), or a plain copy when conjugate is false (used for
    /// the f-diagonal factor whose spectral slices are real).
    void mirror_upper(bool conjugate = true);

    /// Largest violation of the conjugate-symmetry relations, relative to
    /// the Frobenius norm of the stack. Zero for I3 = 1.
    double conjugate_symmetry_residual() const;

private:
    Index i1_ = 0, i2_ = 0, i3_ = 0;
    bool real_origin_ = false;
    std::vector<std::complex<double>> data_;
};

/// Unnormalized forward DFT of every tube x(i,j,:).
SpectralTensor fft_mode3(const Tensor3& x);

/// Inverse DFT of every tube, scaled by 1/I3, returning the real part.
/// When xh claims real origin and the imaginary residue exceeds 1e-8
/// relative, throws SymmetryError.
Tensor3 ifft_mode3(const SpectralTensor& xh);

/// Frobenius norm evaluated in the Fourier domain:
/// sqrt((1/I3) * sum_i ||Xhat_i||_F^2).
double fro_norm_fourier(const SpectralTensor& xh);

} // namespace tcur
