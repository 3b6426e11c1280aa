#pragma once

#include <string>

#include "tcur/tensor3.hpp"

namespace tcur {

/// Binary tensor format "T3D1": 4-byte ASCII magic, three little-endian
/// u64 dims (I1, I2, I3), then I1*I2*I3 little-endian IEEE-754 float64
/// values in column-major order.

/// Throws FormatError on bad magic, truncated payload or non-finite values.
Tensor3 read_tensor(const std::string& path);

/// Lossless float64 round trip.
void write_tensor(const std::string& path, const Tensor3& x);

} // namespace tcur
