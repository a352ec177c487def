#include "ngfisk/distribution.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "ngfisk/quadrature.hpp"
#include "ngfisk/random.hpp"

namespace ngfisk {
namespace {

void check_x(double x) {
    if (!(x >= 0.0)) {
        throw std::domain_error("ngfisk: x must be >= 0, got " + std::to_string(x));
    }
}

// z = (1 - delta)(x / alpha)^beta = (x / c)^beta
double burr_z(const NgFiskParams& p, double x) {
    return (1.0 - p.delta()) * std::pow(x / p.alpha(), p.beta());
}

// log[theta (1 - delta) (beta / alpha) (x / alpha)^(beta - 1)], the numerator shared by pdf and hazard
double log_kernel(const NgFiskParams& p, double x) {
    return std::log(p.theta()) + std::log1p(-p.delta()) + std::log(p.beta()) - std::log(p.alpha()) +
           (p.beta() - 1.0) * std::log(x / p.alpha());
}

// Kernel value at x = 0, where (x/alpha)^(beta-1) is 0, 1 or unbounded.
double kernel_at_zero(const NgFiskParams& p) {
    if (p.beta() == 1.0) {
        return p.theta() * (1.0 - p.delta()) / p.alpha();
    }
    return p.beta() > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

NgFiskParams::NgFiskParams(double alpha, double beta, double theta, double delta)
    : alpha_(alpha), beta_(beta), theta_(theta), delta_(delta) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("NgFiskParams: alpha must be finite and > 0");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("NgFiskParams: beta must be finite and > 0");
    }
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument("NgFiskParams: theta must be finite and > 0");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("NgFiskParams: delta must lie in (0, 1)");
    }
}

NgFiskParams NgFiskParams::from_array(std::span<const double> values) {
    if (values.size() != 4) {
        throw std::invalid_argument("NgFiskParams: expected 4 values (alpha, beta, theta, delta)");
    }
    return NgFiskParams(values[0], values[1], values[2], values[3]);
}

ngx::BaselineSpec NgFiskParams::baseline() const { return ngx::fisk_baseline(alpha_, beta_); }

EffectiveBurrParams effective_burr(const NgFiskParams& p) {
    const double c = p.alpha() * std::pow(1.0 - p.delta(), -1.0 / p.beta());
    return {c, p.beta(), p.theta()};
}

double cdf(const NgFiskParams& p, double x) {
    check_x(x);
    if (x == 0.0) {
        return 0.0;
    }
    return -std::expm1(-p.theta() * std::log1p(burr_z(p, x)));
}

double sf(const NgFiskParams& p, double x) {
    check_x(x);
    if (x == 0.0) {
        return 1.0;
    }
    return std::exp(-p.theta() * std::log1p(burr_z(p, x)));
}

double log_pdf(const NgFiskParams& p, double x) {
    check_x(x);
    if (x == 0.0) {
        return std::log(kernel_at_zero(p));
    }
    return log_kernel(p, x) - (p.theta() + 1.0) * std::log1p(burr_z(p, x));
}

double pdf(const NgFiskParams& p, double x) {
    check_x(x);
    if (x == 0.0) {
        return kernel_at_zero(p);
    }
    return std::exp(log_pdf(p, x));
}

double hazard(const NgFiskParams& p, double x) {
    check_x(x);
    if (x == 0.0) {
        return kernel_at_zero(p);
    }
    return std::exp(log_kernel(p, x) - std::log1p(burr_z(p, x)));
}

double chf(const NgFiskParams& p, double x) {
    check_x(x);
    if (x == 0.0) {
        return 0.0;
    }
    return p.theta() * std::log1p(burr_z(p, x));
}

double rhr(const NgFiskParams& p, double x) {
    check_x(x);
    if (x == 0.0) {
        throw std::domain_error("ngfisk: reversed hazard undefined at x = 0 (cdf is zero)");
    }
    return pdf(p, x) / cdf(p, x);
}

Reliability survival_hazard_chf_rhr(const NgFiskParams& p, double x) {
    Reliability out{sf(p, x), hazard(p, x), chf(p, x), std::nullopt};
    if (x > 0.0) {
        out.reversed_hazard = rhr(p, x);
    }
    return out;
}

double quantile(const NgFiskParams& p, double prob) {
    if (!(prob > 0.0 && prob < 1.0)) {
        throw std::domain_error("ngfisk: quantile probability must lie in (0, 1)");
    }
    // ((1 - prob)^(-1/theta) - 1) / (1 - delta), then scale by alpha and root by beta
    const double w = std::expm1(-std::log1p(-prob) / p.theta()) / (1.0 - p.delta());
    return p.alpha() * std::pow(w, 1.0 / p.beta());
}

double median(const NgFiskParams& p) { return quantile(p, 0.5); }

std::vector<double> sample(const NgFiskParams& p, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<double> out(n);
    for (auto& value : out) {
        value = quantile(p, open_uniform(engine));
    }
    return out;
}

double RawMoment::value() const {
    if (!value_) {
        throw std::domain_error("raw moment diverges (r >= beta * theta)");
    }
    return *value_;
}

RawMoment raw_moment(const NgFiskParams& p, int r) {
    if (r < 1) {
        throw std::invalid_argument("raw_moment: order r must be >= 1");
    }
    const auto burr = effective_burr(p);
    if (static_cast<double>(r) >= burr.beta * burr.theta) {
        return RawMoment::divergent();
    }
    // E[X^r] = int_0^1 Q(u)^r du. With 1 - u = exp(-s):
    //   Q = c (exp(s/theta) - 1)^(1/beta), du = exp(-s) ds, s in (0, inf),
    // which turns the (1 - u)^(-r/(beta theta)) endpoint blow-up into exponential decay.
    const double power = r / burr.beta;
    const double inv_theta = 1.0 / burr.theta;
    auto integrand = [&](double s) {
        if (s <= 0.0) {
            return 0.0;
        }
        const double y = s * inv_theta;
        // log(expm1(y)) without overflow for large y
        const double log_em1 = y > 30.0 ? y + std::log1p(-std::exp(-y)) : std::log(std::expm1(y));
        return std::exp(power * log_em1 - s);
    };
    numeric::QuadratureOptions options;
    options.rel_tol = 1e-12;
    options.abs_tol = 0.0;
    options.max_intervals = 20000;
    const auto result = numeric::integrate_to_infinity(integrand, 0.0, options);
    return RawMoment::finite(std::pow(burr.c, r) * result.value);
}

double galton_skewness(const NgFiskParams& p) {
    const double q1 = quantile(p, 0.25);
    const double q2 = quantile(p, 0.5);
    const double q3 = quantile(p, 0.75);
    return (q3 - 2.0 * q2 + q1) / (q3 - q1);
}

double moors_kurtosis(const NgFiskParams& p) {
    const double e1 = quantile(p, 1.0 / 8.0);
    const double e3 = quantile(p, 3.0 / 8.0);
    const double e5 = quantile(p, 5.0 / 8.0);
    const double e7 = quantile(p, 7.0 / 8.0);
    return (e7 - e5 + e3 - e1) / (quantile(p, 6.0 / 8.0) - quantile(p, 2.0 / 8.0));
}

double order_stat_pdf(const NgFiskParams& p, int i, int n, double x) {
    if (n < 1 || i < 1 || i > n) {
        throw std::domain_error("order_stat_pdf: need 1 <= i <= n");
    }
    check_x(x);
    const double density = pdf(p, x);
    if (density == 0.0) {
        return 0.0;
    }
    if (std::isinf(density)) {
        // x = 0 with beta < 1: only the minimum inherits the pole
        return i == 1 ? density : 0.0;
    }
    const double log_coef = std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(i)) -
                            std::lgamma(n - i + 1.0);
    const double G = cdf(p, x);
    const double S = sf(p, x);
    double log_value = log_coef + std::log(density);
    if (i > 1) {
        log_value += (i - 1) * std::log(G);
    }
    if (n > i) {
        log_value += (n - i) * std::log(S);
    }
    return std::exp(log_value);
}

}  // namespace ngfisk
