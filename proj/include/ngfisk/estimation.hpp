#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngfisk/distribution.hpp"
#include "ngfisk/kernels.hpp"

namespace ngfisk::est {

struct Interval {
    double lower;
    double upper;
};

/// Per-parameter box [lower_i, upper_i] with lower_i < upper_i.
class ParamBox {
public:
    ParamBox(std::vector<double> lower, std::vector<double> upper);

    std::size_t size() const noexcept { return lower_.size(); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    Interval bounds(std::size_t i) const { return {lower_.at(i), upper_.at(i)}; }
    void set_bounds(std::size_t i, double lower, double upper);

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Default NG-Fisk box in (alpha, beta, theta, delta) order:
/// alpha [1e-4, 1e4], beta [1e-4, 1e3], theta [1e-2, 10], delta [0.01, 0.99].
ParamBox ngfisk_default_box();

inline const std::vector<std::string>& ngfisk_param_names() {
    static const std::vector<std::string> names{"alpha", "beta", "theta", "delta"};
    return names;
}

/// How a parameter is treated by the optimizer: log-scaled (positive
/// parameters) or linear (delta).
enum class Scale { log, linear };

using NllFn = std::function<double(std::span<const double> params, std::span<const double> data)>;
using GradFn = std::function<std::vector<double>(std::span<const double> params,
                                                 std::span<const double> data)>;

/// A model the generic fitter can handle: negative log-likelihood over a
/// parameter box, an optional analytic gradient of that nll, and a data-driven
/// starting point.
struct ModelSpec {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<Scale> scales;
    ParamBox box;
    NllFn nll;
    GradFn nll_gradient;  // may be empty: central differences are used
    std::function<std::vector<double>(std::span<const double> data)> initial_guess;
};

struct FitOptions {
    int starts = 8;
    std::uint64_t seed = 1;
    bool std_errors = true;
    /// NG-Fisk only: hold delta at this value and fit (alpha, beta, theta).
    std::optional<double> fixed_delta;
};

struct RestartRecord {
    std::vector<double> start;
    std::vector<double> estimates;
    double nll = 0.0;
    bool converged = false;
    bool accepted = false;
};

struct FitResult {
    std::string model;
    std::vector<std::string> param_names;
    std::vector<double> estimates;
    std::vector<std::optional<double>> std_errors;
    std::vector<std::optional<Interval>> ci95;
    double loglik = 0.0;
    double nll = 0.0;
    bool converged = false;
    std::size_t n_obs = 0;
    std::vector<bool> at_boundary;
    double gradient_norm = 0.0;
    double simplex_diameter = 0.0;
    std::vector<RestartRecord> restarts;

    // NG-Fisk diagnostics: the (alpha, delta) ridge and the identifiable scale.
    std::optional<bool> ridge;
    std::optional<double> effective_scale;
    /// SEs of (alpha, beta, theta) with delta held at its estimate; delta empty.
    std::vector<std::optional<double>> profile_std_errors;
};

/// Eq.-(11)-form log-likelihood with the Fisk baseline:
///   n log theta + n log(1 - delta) + sum log f + (theta - 1) sum log(1 - F)
///   - (theta + 1) sum log(1 - delta F).
/// Throws std::domain_error on empty or nonpositive data; returns -inf when
/// a density term underflows.
double log_likelihood(const NgFiskParams& p, std::span<const double> data,
                      kernels::Exec exec = kernels::Exec::serial);

/// Straight-line serial evaluation of the same formula, kept for tests.
double log_likelihood_reference(const NgFiskParams& p, std::span<const double> data);

/// Analytic gradient of log_likelihood in (alpha, beta, theta, delta) order.
std::array<double, 4> score(const NgFiskParams& p, std::span<const double> data,
                            kernels::Exec exec = kernels::Exec::serial);

/// NG-Fisk as a ModelSpec (nll and gradient, quantile-matched start).
ModelSpec ngfisk_model(const ParamBox& box = ngfisk_default_box());

/// Method-of-quantiles start: match the Burr XII form to the empirical
/// quartiles, then map back to (alpha, beta, theta, delta) with delta = delta_start.
std::array<double, 4> quantile_matched_start(std::span<const double> data,
                                             double delta_start = 0.25);

/// Generic box-constrained MLE: multi-start Nelder–Mead in transformed
/// coordinates, refined by projected gradient descent on the nll.
/// Throws std::invalid_argument on empty, nonpositive or all-equal data.
FitResult fit_mle(const ModelSpec& model, std::span<const double> data,
                  const FitOptions& options = {});

/// NG-Fisk fit with ridge diagnostics and profile standard errors.
FitResult fit_ngfisk(std::span<const double> data, const ParamBox& box = ngfisk_default_box(),
                     const FitOptions& options = {});

/// Square roots of diag(H^-1) for the central-difference Hessian of nll at
/// params (step max(1e-4, 1e-4 |p|)). All components are empty when H is not
/// positive definite.
std::vector<std::optional<double>> observed_info_se(
    const std::function<double(std::span<const double>)>& nll, std::span<const double> params);

/// Empirical (type 7) percentile interval of replicate estimates, optionally
/// clipped to a box interval. Throws std::invalid_argument below 40 replicates.
Interval percentile_ci(std::span<const double> replicates, double level = 0.95,
                       std::optional<Interval> clip = std::nullopt);

/// Largest |delta log-likelihood| when (alpha, delta) is moved along constant
/// c = alpha (1 - delta)^(-1/beta) to a few other delta values in (0, 1).
double ridge_deviation(const NgFiskParams& p, std::span<const double> data);

}  // namespace ngfisk::est
