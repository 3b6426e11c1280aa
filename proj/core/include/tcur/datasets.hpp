#pragma once

#include <array>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "tcur/tensor3.hpp"

namespace tcur {

/// The two-dimensional optimization test functions used for the function
/// tensors. `booth` defaults to the standard form with both terms squared;
/// booth_literal keeps the second term unsquared.
enum class FunctionKind { exponential, rastrigin, booth, matyas, easom };

const char* function_name(FunctionKind k);
std::optional<FunctionKind> parse_function(const std::string& name);

double eval_function(FunctionKind kind, double x, double y, bool booth_literal = false);

/// Function tensors are built on a fixed endpoint-inclusive grid over
/// [0, 1000]^2 (step 1000/999), stored as a 1000 x 1000 matrix with the row
/// index along x, then reshaped column-major to 100 x 100 x 100.
struct FunctionSpec {
    static constexpr Index grid_points = 1000;
    static constexpr double domain_max = 1000.0;
    static constexpr std::array<Index, 3> tensor_shape = {100, 100, 100};
};

/// Synthetic tensor X(i,j,k) = (i^p + j^p + k^p)^(-1/p), 1-based indices.
/// Requires p > 0.
Tensor3 gen_synthetic(double p, std::array<Index, 3> dims);

/// The discretized function as a grid_points x grid_points matrix.
Eigen::MatrixXd function_grid(FunctionKind kind, bool booth_literal = false);

/// Grid matrix reshaped to the 100 x 100 x 100 function tensor.
Tensor3 gen_function_tensor(FunctionKind kind, bool booth_literal = false);

/// Column-major relabeling of a matrix into a tensor of the given shape.
/// Throws ShapeError when the element counts differ.
Tensor3 reshape_mat_to_tensor(const Eigen::MatrixXd& m, std::array<Index, 3> dims);

} // namespace tcur
