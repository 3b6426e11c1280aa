#pragma once

#include <stdexcept>
#include <string>

namespace tcur {

/// Tensor dimensions do not conform for the requested operation.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A slice index is out of range or duplicated.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A requested rank is outside the admissible range.
class RankError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or corrupt tensor file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Not enough positive-probability indices to draw from.
class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inverse transform of data claimed real left a large imaginary residue,
/// i.e. the conjugate symmetry of the spectral slices is broken.
class SymmetryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A spectral slice is numerically singular. Carries the 1-based slice index.
class SingularSliceError : public std::runtime_error {
public:
    SingularSliceError(const std::string& msg, long slice)
        : std::runtime_error(msg + " (spectral slice " + std::to_string(slice) + ")"),
          slice_(slice) {}

    long slice() const { return slice_; }

private:
    long slice_;
};

/// Greedy index selection hit a singular interpolation submatrix.
/// Carries the 1-based selection step at which it happened.
class DegeneracyError : public std::runtime_error {
public:
    DegeneracyError(const std::string& msg, long step)
        : std::runtime_error(msg + " (selection step " + std::to_string(step) + ")"),
          step_(step) {}

    long step() const { return step_; }

private:
    long step_;
};

} // namespace tcur
