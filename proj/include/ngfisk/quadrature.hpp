#pragma once

#include <functional>

namespace ngfisk::numeric {

struct QuadratureOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    int max_intervals = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    bool converged = false;
};

/// Globally adaptive 21-point Gauss–Kronrod integration of f over [a, b].
/// The interval with the largest error estimate is bisected until the
/// summed estimate meets max(abs_tol, rel_tol * |value|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Integral of f over [a, inf), mapped onto [0, 1) by x = a + t / (1 - t).
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& options = {});

}  // namespace ngfisk::numeric
