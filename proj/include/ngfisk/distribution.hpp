#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ngfisk/ngx_family.hpp"

namespace ngfisk {

/// NG-Fisk parameter vector (alpha, beta, theta, delta).
///
/// alpha is a scale in data units, beta and theta are shapes, delta is the
/// NG-X tilt. The density depends on (alpha, delta) only through the
/// effective Burr XII scale c = alpha (1 - delta)^(-1/beta).
class NgFiskParams {
public:
    /// Throws std::invalid_argument unless alpha, beta, theta > 0 and 0 < delta < 1.
    NgFiskParams(double alpha, double beta, double theta, double delta);

    static NgFiskParams from_array(std::span<const double> values);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double theta() const noexcept { return theta_; }
    double delta() const noexcept { return delta_; }

    std::array<double, 4> as_array() const noexcept { return {alpha_, beta_, theta_, delta_}; }

    /// Fisk baseline and NG-X parameters this distribution is built from.
    ngx::BaselineSpec baseline() const;
    ngx::NgxParams family() const { return ngx::NgxParams(theta_, delta_); }

private:
    double alpha_;
    double beta_;
    double theta_;
    double delta_;
};

/// Burr XII form 1 - (1 + (x/c)^beta)^(-theta).
struct EffectiveBurrParams {
    double c;
    double beta;
    double theta;
};

EffectiveBurrParams effective_burr(const NgFiskParams& p);

double cdf(const NgFiskParams& p, double x);
double pdf(const NgFiskParams& p, double x);
double log_pdf(const NgFiskParams& p, double x);
double sf(const NgFiskParams& p, double x);
double hazard(const NgFiskParams& p, double x);
double chf(const NgFiskParams& p, double x);
/// Throws std::domain_error at x = 0.
double rhr(const NgFiskParams& p, double x);

struct Reliability {
    double survival;
    double hazard;
    double cumulative_hazard;
    std::optional<double> reversed_hazard;  // empty at x = 0
};

Reliability survival_hazard_chf_rhr(const NgFiskParams& p, double x);

double quantile(const NgFiskParams& p, double prob);
double median(const NgFiskParams& p);

/// n draws by inverse transform, deterministic in seed.
std::vector<double> sample(const NgFiskParams& p, std::size_t n, std::uint64_t seed);

/// E[X^r], or a divergence marker when r >= beta * theta.
class RawMoment {
public:
    static RawMoment finite(double value) { return RawMoment(value); }
    static RawMoment divergent() { return RawMoment(std::nullopt); }

    bool is_finite() const noexcept { return value_.has_value(); }
    bool is_divergent() const noexcept { return !value_.has_value(); }
    /// Throws std::domain_error on a divergent moment.
    double value() const;

private:
    explicit RawMoment(std::optional<double> v) : value_(v) {}
    std::optional<double> value_;
};

RawMoment raw_moment(const NgFiskParams& p, int r);

double galton_skewness(const NgFiskParams& p);
double moors_kurtosis(const NgFiskParams& p);

/// Density of the i-th order statistic out of n (1-based i).
double order_stat_pdf(const NgFiskParams& p, int i, int n, double x);

}  // namespace ngfisk
