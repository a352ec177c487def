#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ngfisk::opt {

using Objective = std::function<double(std::span<const double>)>;
using Gradient = std::function<std::vector<double>(std::span<const double>)>;

struct NelderMeadOptions {
    int max_evaluations = 6000;
    double diameter_tol = 1e-8;
    double initial_step = 0.5;
    int restarts = 3;  // rebuild the simplex around the best vertex this many times
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    double diameter = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Unconstrained Nelder–Mead minimization with standard coefficients
/// (reflect 1, expand 2, contract 1/2, shrink 1/2). Non-finite objective
/// values are treated as +inf. Converged means the simplex diameter
/// (max inf-norm distance to the best vertex) fell below diameter_tol.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

struct ProjectedGradientOptions {
    int max_iterations = 400;
    double gradient_tol = 1e-5;
};

struct ProjectedGradientResult {
    std::vector<double> x;
    double value = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Projected gradient descent on the box [lower, upper] with Armijo
/// backtracking. gradient_norm is the inf-norm of P(x - g) - x.
ProjectedGradientResult projected_gradient(const Objective& f, const Gradient& grad,
                                           std::vector<double> x0, std::span<const double> lower,
                                           std::span<const double> upper,
                                           const ProjectedGradientOptions& options = {});

}  // namespace ngfisk::opt
