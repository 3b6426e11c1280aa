#pragma once

#include "tcur/spectral.hpp"
#include "tcur/tensor3.hpp"

namespace tcur {

/// t-product X * Y computed as slice-wise complex matrix products in the
/// Fourier domain, processing only the first ceil((I3+1)/2) slices and
/// mirroring the conjugates. Requires x.i2() == y.i1() and x.i3() == y.i3().
Tensor3 tproduct(const Tensor3& x, const Tensor3& y);

/// Reference t-product: materializes the block-circulant matrix circ(X),
/// multiplies by unfold(Y) and folds. O(I1*I2*I4*I3^2); cross-check path.
Tensor3 tproduct_oracle(const Tensor3& x, const Tensor3& y);

/// Inverse of an n x n x I3 tensor via slice-wise inverses in the Fourier
/// domain. Throws SingularSliceError when a spectral slice has condition
/// number above 1/(machine epsilon * n).
Tensor3 tinverse(const Tensor3& x);

/// Moore-Penrose pseudoinverse applied per spectral slice. Singular values
/// below max(I1,I2) * machine epsilon * sigma_max are treated as zero.
/// Always defined; output has shape I2 x I1 x I3.
Tensor3 tpinv(const Tensor3& x);

} // namespace tcur
