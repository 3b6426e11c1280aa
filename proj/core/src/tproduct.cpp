#include "tcur/tproduct.hpp"

#include <string>

#include <Eigen/Dense>

#include "complex_linalg.hpp"
#include "tcur/parallel.hpp"

namespace tcur {

namespace {

void check_conforming(const Tensor3& x, const Tensor3& y) {
    if (x.i2() != y.i1())
        throw ShapeError("t-product inner modes differ: " + std::to_string(x.i2()) +
                         " vs " + std::to_string(y.i1()));
    if (x.i3() != y.i3())
        throw ShapeError("t-product third modes differ: " + std::to_string(x.i3()) +
                         " vs " + std::to_string(y.i3()));
}

} // namespace

Tensor3 tproduct(const Tensor3& x, const Tensor3& y) {
    check_conforming(x, y);
    SpectralTensor xh = fft_mode3(x);
    SpectralTensor yh = fft_mode3(y);
    SpectralTensor ch(x.i1(), y.i2(), x.i3(), /*real_origin=*/true);
    parallel_for(ch.half(), [&](Index k) {
        ch.slice(k).noalias() = xh.slice(k) * yh.slice(k);
    });
    ch.mirror_upper();
    return ifft_mode3(ch);
}

Tensor3 tproduct_oracle(const Tensor3& x, const Tensor3& y) {
    check_conforming(x, y);
    const Index i1 = x.i1(), i2 = x.i2(), i4 = y.i2(), i3 = x.i3();

    Eigen::MatrixXd circ = Eigen::MatrixXd::Zero(i1 * i3, i2 * i3);
    for (Index a = 0; a < i3; ++a)
        for (Index b = 0; b < i3; ++b)
            circ.block(a * i1, b * i2, i1, i2) = x.slice(((a - b) % i3 + i3) % i3);

    Eigen::MatrixXd unfolded(i2 * i3, i4);
    for (Index k = 0; k < i3; ++k) unfolded.middleRows(k * i2, i2) = y.slice(k);

    Eigen::MatrixXd product = circ * unfolded;

    Tensor3 out(i1, i4, i3);
    for (Index k = 0; k < i3; ++k) out.slice(k) = product.middleRows(k * i1, i1);
    return out;
}

Tensor3 tinverse(const Tensor3& x) {
    if (x.i1() != x.i2())
        throw ShapeError("tinverse requires a square tensor, got " + std::to_string(x.i1()) +
                         "x" + std::to_string(x.i2()));
    SpectralTensor xh = fft_mode3(x);
    SpectralTensor inv(x.i1(), x.i1(), x.i3(), /*real_origin=*/true);
    for (Index k = 0; k < inv.half(); ++k) {
        detail::SvdInverse si = detail::svd_inverse(xh.slice(k));
        if (si.singular(x.i1()))
            throw SingularSliceError("tinverse: condition number exceeds 1/(eps*n)",
                                     static_cast<long>(k) + 1);
        inv.slice(k) = si.inverse;
    }
    inv.mirror_upper();
    return ifft_mode3(inv);
}

Tensor3 tpinv(const Tensor3& x) {
    SpectralTensor xh = fft_mode3(x);
    SpectralTensor pinv(x.i2(), x.i1(), x.i3(), /*real_origin=*/true);
    parallel_for(pinv.half(), [&](Index k) {
        pinv.slice(k) = detail::pseudo_inverse(xh.slice(k));
    });
    pinv.mirror_upper();
    return ifft_mode3(pinv);
}

} // namespace tcur
