#include "tcur/tsvd.hpp"

#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "complex_linalg.hpp"
#include "tcur/parallel.hpp"
#include "tcur/spectral.hpp"
#include "tcur/tproduct.hpp"

namespace tcur {

namespace {

// Rotates each singular pair so the largest-magnitude entry of the left
// vector is real positive (first occurrence wins on ties). Index selection
// downstream depends on the basis representative; this pins one.
void fix_phases(Eigen::MatrixXcd& u, Eigen::MatrixXcd& v) {
    for (Index t = 0; t < u.cols(); ++t) {
        Index arg = 0;
        double best = -1.0;
        for (Index i = 0; i < u.rows(); ++i) {
            double mag = std::abs(u(i, t));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        if (best <= 0.0) continue;
        std::complex<double> phase = u(arg, t) / best;
        std::complex<double> rot = std::conj(phase);
        u.col(t) *= rot;
        v.col(t) *= rot;
    }
}

Eigen::BDCSVD<Eigen::MatrixXcd> thin_svd(const Eigen::MatrixXcd& m) {
    return Eigen::BDCSVD<Eigen::MatrixXcd>(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

} // namespace

TSvdFactors truncated_tsvd(const Tensor3& x, Index rank) {
    const Index max_rank = std::min(x.i1(), x.i2());
    if (rank < 1 || rank > max_rank)
        throw RankError("tubal rank " + std::to_string(rank) + " outside [1, " +
                        std::to_string(max_rank) + "]");

    SpectralTensor xh = fft_mode3(x);
    SpectralTensor uh(x.i1(), rank, x.i3(), true);
    SpectralTensor sh(rank, rank, x.i3(), true);
    SpectralTensor vh(x.i2(), rank, x.i3(), true);

    parallel_for(xh.half(), [&](Index k) {
        auto svd = thin_svd(xh.slice(k));
        Eigen::MatrixXcd u = svd.matrixU().leftCols(rank);
        Eigen::MatrixXcd v = svd.matrixV().leftCols(rank);
        fix_phases(u, v);
        uh.slice(k) = u;
        vh.slice(k) = v;
        sh.slice(k) = svd.singularValues().head(rank).cast<std::complex<double>>().asDiagonal();
    });
    uh.mirror_upper();
    vh.mirror_upper();
    sh.mirror_upper(/*conjugate=*/false);

    TSvdFactors f;
    f.u = ifft_mode3(uh);
    f.s = ifft_mode3(sh);
    f.v = ifft_mode3(vh);
    f.rank = rank;
    return f;
}

TSvdFactors truncate(const TSvdFactors& f, Index rank) {
    if (rank < 1 || rank > f.rank)
        throw RankError("cannot truncate factors of rank " + std::to_string(f.rank) +
                        " to rank " + std::to_string(rank));
    if (rank == f.rank) return f;

    TSvdFactors out;
    out.rank = rank;
    out.u = Tensor3(f.u.i1(), rank, f.u.i3());
    out.v = Tensor3(f.v.i1(), rank, f.v.i3());
    out.s = Tensor3(rank, rank, f.s.i3());
    for (Index k = 0; k < f.u.i3(); ++k) {
        out.u.slice(k) = f.u.slice(k).leftCols(rank);
        out.v.slice(k) = f.v.slice(k).leftCols(rank);
        out.s.slice(k) = f.s.slice(k).topLeftCorner(rank, rank);
    }
    return out;
}

Tensor3 tsvd_reconstruct(const TSvdFactors& f) {
    return tproduct(tproduct(f.u, f.s), ttranspose(f.v));
}

std::vector<Eigen::VectorXd> slice_singular_values(const Tensor3& x) {
    SpectralTensor xh = fft_mode3(x);
    const Index half = xh.half();
    std::vector<Eigen::VectorXd> values(static_cast<size_t>(x.i3()));
    parallel_for(half, [&](Index k) {
        values[static_cast<size_t>(k)] =
            Eigen::BDCSVD<Eigen::MatrixXcd>(xh.slice(k)).singularValues();
    });
    // conjugate slices share singular values
    for (Index k = half; k < x.i3(); ++k)
        values[static_cast<size_t>(k)] = values[static_cast<size_t>(x.i3() - k)];
    return values;
}

LeverageScores tubal_leverage(const Tensor3& basis) {
    LeverageScores lv;
    lv.rank = basis.i2();
    lv.scores.assign(static_cast<size_t>(basis.i1()), 0.0);
    for (Index k = 0; k < basis.i3(); ++k)
        for (Index j = 0; j < basis.i2(); ++j)
            for (Index i = 0; i < basis.i1(); ++i) {
                double v = basis(i, j, k);
                lv.scores[static_cast<size_t>(i)] += v * v;
            }
    return lv;
}

} // namespace tcur
