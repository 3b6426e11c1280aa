#include "tcur/datasets.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace tcur {

const char* function_name(FunctionKind k) {
    switch (k) {
        case FunctionKind::exponential: return "exponential";
        case FunctionKind::rastrigin: return "rastrigin";
        case FunctionKind::booth: return "booth";
        case FunctionKind::matyas: return "matyas";
        case FunctionKind::easom: return "easom";
    }
    return "unknown";
}

std::optional<FunctionKind> parse_function(const std::string& name) {
    if (name == "exponential") return FunctionKind::exponential;
    if (name == "rastrigin") return FunctionKind::rastrigin;
    if (name == "booth") return FunctionKind::booth;
    if (name == "matyas") return FunctionKind::matyas;
    if (name == "easom") return FunctionKind::easom;
    return std::nullopt;
}

double eval_function(FunctionKind kind, double x, double y, bool booth_literal) {
    constexpr double pi = std::numbers::pi;
    switch (kind) {
        case FunctionKind::exponential:
            return -std::exp(-0.5 * (x * x + y * y));
        case FunctionKind::rastrigin:
            return 20.0 + x * x + y * y -
                   10.0 * (std::cos(2.0 * pi * x) + std::cos(2.0 * pi * y));
        case FunctionKind::booth: {
            double a = x + 2.0 * y - 7.0;
            double b = 2.0 * x + y - 5.0;
            return booth_literal ? a * a + b : a * a + b * b;
        }
        case FunctionKind::matyas:
            return 0.26 * (x * x + y * y) - 0.48 * x * y;
        case FunctionKind::easom:
            return -std::cos(x) * std::cos(y) *
                   std::exp(-((x - pi) * (x - pi) + (y - pi) * (y - pi)));
    }
    return 0.0;
}

Tensor3 gen_synthetic(double p, std::array<Index, 3> dims) {
    if (!(p > 0.0)) throw std::invalid_argument("gen_synthetic requires p > 0");
    Tensor3 out(dims[0], dims[1], dims[2]);

    auto powers = [p](Index n) {
        std::vector<double> v(static_cast<size_t>(n));
        for (Index i = 0; i < n; ++i) v[static_cast<size_t>(i)] = std::pow(static_cast<double>(i + 1), p);
        return v;
    };
    std::vector<double> pi1 = powers(dims[0]);
    std::vector<double> pi2 = powers(dims[1]);
    std::vector<double> pi3 = powers(dims[2]);

    const double inv_p = -1.0 / p;
    for (Index k = 0; k < dims[2]; ++k)
        for (Index j = 0; j < dims[1]; ++j)
            for (Index i = 0; i < dims[0]; ++i)
                out(i, j, k) = std::pow(pi1[static_cast<size_t>(i)] + pi2[static_cast<size_t>(j)] +
                                        pi3[static_cast<size_t>(k)], inv_p);
    return out;
}

Eigen::MatrixXd function_grid(FunctionKind kind, bool booth_literal) {
    const Index n = FunctionSpec::grid_points;
    const double step = FunctionSpec::domain_max / static_cast<double>(n - 1);
    Eigen::MatrixXd m(n, n);
    for (Index b = 0; b < n; ++b) {
        double y = static_cast<double>(b) * step;
        for (Index a = 0; a < n; ++a)
            m(a, b) = eval_function(kind, static_cast<double>(a) * step, y, booth_literal);
    }
    return m;
}

Tensor3 gen_function_tensor(FunctionKind kind, bool booth_literal) {
    return reshape_mat_to_tensor(function_grid(kind, booth_literal),
                                 FunctionSpec::tensor_shape);
}

Tensor3 reshape_mat_to_tensor(const Eigen::MatrixXd& m, std::array<Index, 3> dims) {
    if (m.size() != dims[0] * dims[1] * dims[2])
        throw ShapeError("reshape: element count " + std::to_string(m.size()) +
                         " does not match target shape");
    std::vector<double> data(m.data(), m.data() + m.size());
    return Tensor3(dims[0], dims[1], dims[2], std::move(data));
}

} // namespace tcur
