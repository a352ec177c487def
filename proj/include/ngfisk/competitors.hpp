#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngfisk/estimation.hpp"

// The five rival lifetime models compared against NG-Fisk on failure-time data.
//
// Parameter order per model:
//   NEx-FW (gamma, beta, theta)        G = 1 - exp(-exp(beta x^gamma + theta x^2))
//   FW     (alpha, gamma, beta, theta) G = 1 - exp(-exp(beta x^gamma + theta x^alpha))
//   KWP    (a, b, c, beta, lambda)     G = (1 - exp(-lambda s)) / (1 - exp(-lambda)),
//                                      s = 1 - (1 - (1 - exp(-(beta x)^c))^a)^b
//   Ku-W   (a, b, gamma, theta)        G = 1 - (1 - (1 - exp(-gamma x^theta))^a)^b
//   Z-W    (alpha, gamma, theta)       G = (exp(alpha (1 - exp(-gamma x^theta))) - 1) / (exp(alpha) - 1)
//
// NEx-FW and FW are evaluated as printed: their exponent vanishes at x = 0,
// so G(0) = 1 - 1/e and the density integrates to 1/e over (0, inf).
namespace ngfisk::competitors {

enum class Kind { nexfw, fw, kwp, kuw, zw };

inline constexpr Kind kAllKinds[] = {Kind::nexfw, Kind::fw, Kind::kwp, Kind::kuw, Kind::zw};

std::string_view display_name(Kind kind);
/// Accepts display names and short ids (e.g. "Ku-W", "kuw"), case-insensitive.
/// Throws std::invalid_argument on anything else.
Kind parse_kind(std::string_view name);
std::size_t arity(Kind kind);
const std::vector<std::string>& param_names(Kind kind);
est::ParamBox default_box(Kind kind);

class CompetitorModel {
public:
    /// Throws std::invalid_argument on wrong arity or a nonpositive parameter.
    CompetitorModel(Kind kind, std::vector<double> params);

    Kind kind() const noexcept { return kind_; }
    std::string_view name() const { return display_name(kind_); }
    const std::vector<double>& params() const noexcept { return params_; }

private:
    Kind kind_;
    std::vector<double> params_;
};

/// Throws std::domain_error for x < 0.
double cdf(const CompetitorModel& m, double x);
/// Analytic derivative of cdf. Throws std::domain_error for x <= 0.
double pdf(const CompetitorModel& m, double x);
double log_pdf(const CompetitorModel& m, double x);

/// Negative log-likelihood of an unvalidated parameter vector (for the fitter).
double nll(Kind kind, std::span<const double> params, std::span<const double> data);

est::ModelSpec model_spec(Kind kind);

/// Default number of starts for competitor fits; their surfaces are rougher
/// than NG-Fisk's.
inline constexpr int kCompetitorStarts = 24;

est::FitResult fit_competitor(Kind kind, std::span<const double> data,
                              const est::FitOptions& options = {kCompetitorStarts});

}  // namespace ngfisk::competitors
