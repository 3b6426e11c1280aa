#pragma once

#include <array>
#include <cassert>
#include <vector>

#include <Eigen/Core>

#include "tcur/errors.hpp"
#include "tcur/index_set.hpp"

namespace tcur {

using Index = Eigen::Index;

/// Dense real third-order tensor of shape I1 x I2 x I3, column-major:
/// element (i,j,k) lives at i + j*I1 + k*I1*I2 (0-based). A frontal slice
/// is therefore a contiguous column-major I1 x I2 matrix.
class Tensor3 {
public:
    Tensor3() = default;

    /// Zero-filled tensor. Dimensions must be positive.
    Tensor3(Index i1, Index i2, Index i3);

    /// Adopts `data` (length must be i1*i2*i3, column-major).
    Tensor3(Index i1, Index i2, Index i3, std::vector<double> data);

    Index i1() const { return i1_; }
    Index i2() const { return i2_; }
    Index i3() const { return i3_; }
    std::array<Index, 3> shape() const { return {i1_, i2_, i3_}; }
    Index size() const { return static_cast<Index>(data_.size()); }

    double& operator()(Index i, Index j, Index k) {
        assert(i >= 0 && i < i1_ && j >= 0 && j < i2_ && k >= 0 && k < i3_);
        return data_[i + j * i1_ + k * i1_ * i2_];
    }
    double operator()(Index i, Index j, Index k) const {
        assert(i >= 0 && i < i1_ && j >= 0 && j < i2_ && k >= 0 && k < i3_);
        return data_[i + j * i1_ + k * i1_ * i2_];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    /// Frontal slice X(:,:,k) as an Eigen view, 0-based k.
    Eigen::Map<Eigen::MatrixXd> slice(Index k) {
        assert(k >= 0 && k < i3_);
        return {data_.data() + k * i1_ * i2_, i1_, i2_};
    }
    Eigen::Map<const Eigen::MatrixXd> slice(Index k) const {
        assert(k >= 0 && k < i3_);
        return {data_.data() + k * i1_ * i2_, i1_, i2_};
    }

    bool all_finite() const;

    bool same_shape(const Tensor3& other) const {
        return i1_ == other.i1_ && i2_ == other.i2_ && i3_ == other.i3_;
    }

    Tensor3 operator+(const Tensor3& other) const;
    Tensor3 operator-(const Tensor3& other) const;
    Tensor3& operator*=(double s);

private:
    Index i1_ = 0, i2_ = 0, i3_ = 0;
    std::vector<double> data_;
};

/// Frobenius norm sqrt(sum of squares).
double fro_norm(const Tensor3& x);

/// Identity tensor: first frontal slice is the n x n identity, the rest zero.
Tensor3 identity_tensor(Index n, Index i3);

/// Tensor transpose: transpose every frontal slice and reverse the order of
/// slices 2..I3.
Tensor3 ttranspose(const Tensor3& x);

/// Gather of horizontal slices X(s,:,:), 1-based distinct indices.
Tensor3 slice_horizontal(const Tensor3& x, const IndexSet& s);

/// Gather of lateral slices X(:,q,:), 1-based distinct indices.
Tensor3 slice_lateral(const Tensor3& x, const IndexSet& q);

} // namespace tcur
