#include "tcur/tensor3.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

namespace tcur {

void IndexSet::validate() const {
    std::unordered_set<Index> seen;
    seen.reserve(indices.size());
    for (Index i : indices) {
        if (i < 1 || i > bound)
            throw IndexError("index " + std::to_string(i) + " outside [1, " +
                             std::to_string(bound) + "]");
        if (!seen.insert(i).second)
            throw IndexError("duplicate index " + std::to_string(i));
    }
}

bool IndexSet::contains(Index i) const {
    for (Index v : indices)
        if (v == i) return true;
    return false;
}

namespace {

void check_dims(Index i1, Index i2, Index i3) {
    if (i1 < 1 || i2 < 1 || i3 < 1)
        throw ShapeError("tensor dimensions must be positive, got " + std::to_string(i1) +
                         "x" + std::to_string(i2) + "x" + std::to_string(i3));
}

} // namespace

Tensor3::Tensor3(Index i1, Index i2, Index i3) : i1_(i1), i2_(i2), i3_(i3) {
    check_dims(i1, i2, i3);
    data_.assign(static_cast<size_t>(i1) * i2 * i3, 0.0);
}

Tensor3::Tensor3(Index i1, Index i2, Index i3, std::vector<double> data)
    : i1_(i1), i2_(i2), i3_(i3), data_(std::move(data)) {
    check_dims(i1, i2, i3);
    if (static_cast<Index>(data_.size()) != i1 * i2 * i3)
        throw ShapeError("data length " + std::to_string(data_.size()) +
                         " does not match shape " + std::to_string(i1) + "x" +
                         std::to_string(i2) + "x" + std::to_string(i3));
}

bool Tensor3::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Tensor3 Tensor3::operator+(const Tensor3& other) const {
    if (!same_shape(other)) throw ShapeError("tensor addition with mismatched shapes");
    Tensor3 out(i1_, i2_, i3_);
    for (Index t = 0; t < size(); ++t) out.data_[t] = data_[t] + other.data_[t];
    return out;
}

Tensor3 Tensor3::operator-(const Tensor3& other) const {
    if (!same_shape(other)) throw ShapeError("tensor subtraction with mismatched shapes");
    Tensor3 out(i1_, i2_, i3_);
    for (Index t = 0; t < size(); ++t) out.data_[t] = data_[t] - other.data_[t];
    return out;
}

Tensor3& Tensor3::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

double fro_norm(const Tensor3& x) {
    double sum = 0.0;
    const double* d = x.data();
    for (Index t = 0; t < x.size(); ++t) sum += d[t] * d[t];
    return std::sqrt(sum);
}

Tensor3 identity_tensor(Index n, Index i3) {
    if (n < 1 || i3 < 1) throw ShapeError("identity_tensor requires positive dimensions");
    Tensor3 out(n, n, i3);
    for (Index i = 0; i < n; ++i) out(i, i, 0) = 1.0;
    return out;
}

Tensor3 ttranspose(const Tensor3& x) {
    Tensor3 out(x.i2(), x.i1(), x.i3());
    out.slice(0) = x.slice(0).transpose();
    for (Index k = 1; k < x.i3(); ++k) out.slice(k) = x.slice(x.i3() - k).transpose();
    return out;
}

Tensor3 slice_horizontal(const Tensor3& x, const IndexSet& s) {
    if (s.bound != x.i1()) throw IndexError("horizontal index set bound does not match I1");
    s.validate();
    Tensor3 out(s.size(), x.i2(), x.i3());
    for (Index k = 0; k < x.i3(); ++k)
        for (Index j = 0; j < x.i2(); ++j)
            for (Index r = 0; r < s.size(); ++r)
                out(r, j, k) = x(s.indices[static_cast<size_t>(r)] - 1, j, k);
    return out;
}

Tensor3 slice_lateral(const Tensor3& x, const IndexSet& q) {
    if (q.bound != x.i2()) throw IndexError("lateral index set bound does not match I2");
    q.validate();
    Tensor3 out(x.i1(), q.size(), x.i3());
    for (Index k = 0; k < x.i3(); ++k)
        for (Index c = 0; c < q.size(); ++c)
            out.slice(k).col(c) = x.slice(k).col(q.indices[static_cast<size_t>(c)] - 1);
    return out;
}

} // namespace tcur
