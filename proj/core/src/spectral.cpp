#include "tcur/spectral.hpp"

#include <cmath>
#include <mutex>

#include <fftw3.h>

namespace tcur {

namespace {

// FFTW planning is not thread-safe; plans are created and destroyed under
// this lock. FFTW_ESTIMATE | FFTW_UNALIGNED keeps the chosen kernel a pure
// function of the problem shape, so repeated runs are bitwise identical.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

// In-place DFT of `count` interleaved tubes of length `len` (tube stride =
// count, consecutive tubes adjacent), matching the column-major layout where
// tubes run across frontal slices.
void run_dft(std::complex<double>* data, Index count, Index len, int sign) {
    if (len == 1) return;
    std::lock_guard<std::mutex> lock(fftw_mutex());
    int n = static_cast<int>(len);
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_plan plan = fftw_plan_many_dft(1, &n, static_cast<int>(count),
                                        ptr, nullptr, static_cast<int>(count), 1,
                                        ptr, nullptr, static_cast<int>(count), 1,
                                        sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

} // namespace

SpectralTensor::SpectralTensor(Index i1, Index i2, Index i3, bool real_origin)
    : i1_(i1), i2_(i2), i3_(i3), real_origin_(real_origin) {
    if (i1 < 1 || i2 < 1 || i3 < 1)
        throw ShapeError("spectral tensor dimensions must be positive");
    data_.assign(static_cast<size_t>(i1) * i2 * i3, {0.0, 0.0});
}

void SpectralTensor::mirror_upper(bool conjugate) {
    for (Index k = half(); k < i3_; ++k) {
        if (conjugate)
            slice(k) = slice(i3_ - k).conjugate();
        else
            slice(k) = slice(i3_ - k);
    }
}

double SpectralTensor::conjugate_symmetry_residual() const {
    double norm_sq = 0.0;
    for (const auto& v : data_) norm_sq += std::norm(v);
    double norm = std::sqrt(norm_sq);
    if (norm == 0.0) return 0.0;

    double worst = 0.0;
    // slice 0 must be real; so must the Nyquist slice for even I3.
    for (Index k = 0; k < i3_; ++k) {
        Index mirror = (i3_ - k) % i3_;
        if (mirror == k) {
            double imag_sq = 0.0;
            auto s = slice(k);
            for (Index j = 0; j < i2_; ++j)
                for (Index i = 0; i < i1_; ++i) imag_sq += s(i, j).imag() * s(i, j).imag();
            worst = std::max(worst, std::sqrt(imag_sq));
        } else if (k < mirror) {
            double diff_sq = 0.0;
            auto a = slice(k);
            auto b = slice(mirror);
            for (Index j = 0; j < i2_; ++j)
                for (Index i = 0; i < i1_; ++i) diff_sq += std::norm(a(i, j) - std::conj(b(i, j)));
            worst = std::max(worst, std::sqrt(diff_sq));
        }
    }
    return worst / norm;
}

SpectralTensor fft_mode3(const Tensor3& x) {
    SpectralTensor out(x.i1(), x.i2(), x.i3(), /*real_origin=*/true);
    const double* src = x.data();
    std::complex<double>* dst = out.data();
    for (Index t = 0; t < x.size(); ++t) dst[t] = src[t];
    run_dft(dst, x.i1() * x.i2(), x.i3(), FFTW_FORWARD);
    return out;
}

Tensor3 ifft_mode3(const SpectralTensor& xh) {
    const Index plane = xh.i1() * xh.i2();
    const Index total = plane * xh.i3();
    std::vector<std::complex<double>> work(xh.data(), xh.data() + total);
    run_dft(work.data(), plane, xh.i3(), FFTW_BACKWARD);

    const double scale = 1.0 / static_cast<double>(xh.i3());
    double full_sq = 0.0;
    double imag_sq = 0.0;
    std::vector<double> real(static_cast<size_t>(total));
    for (Index t = 0; t < total; ++t) {
        std::complex<double> v = work[static_cast<size_t>(t)] * scale;
        full_sq += std::norm(v);
        imag_sq += v.imag() * v.imag();
        real[static_cast<size_t>(t)] = v.real();
    }
    if (xh.real_origin() && full_sq > 0.0 &&
        std::sqrt(imag_sq) > 1e-8 * std::sqrt(full_sq)) {
        throw SymmetryError("inverse transform of real-origin data left relative imaginary "
                            "residue " + std::to_string(std::sqrt(imag_sq / full_sq)));
    }
    return Tensor3(xh.i1(), xh.i2(), xh.i3(), std::move(real));
}

double fro_norm_fourier(const SpectralTensor& xh) {
    double sum = 0.0;
    const std::complex<double>* d = xh.data();
    const Index total = xh.i1() * xh.i2() * xh.i3();
    for (Index t = 0; t < total; ++t) sum += std::norm(d[t]);
    return std::sqrt(sum / static_cast<double>(xh.i3()));
}

} // namespace tcur
