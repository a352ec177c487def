#include "ngfisk/ngx_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ngfisk::ngx {
namespace {

void check_support(const BaselineSpec& baseline, double x) {
    if (!(x >= baseline.support_lo)) {
        throw std::domain_error("ngx: x = " + std::to_string(x) + " is below the support of " +
                                baseline.name);
    }
}

double baseline_sf(const BaselineSpec& baseline, double x, double F) {
    return baseline.sf ? baseline.sf(x) : 1.0 - F;
}

// log[(1 - F) / (1 - delta F)]
double log_ratio(const BaselineSpec& baseline, const NgxParams& pars, double x) {
    const double F = baseline.cdf(x);
    return std::log(baseline_sf(baseline, x, F)) - std::log1p(-pars.delta() * F);
}

}  // namespace

BaselineSpec fisk_baseline(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("fisk baseline requires alpha > 0 and beta > 0");
    }
    BaselineSpec spec;
    spec.name = "Fisk";
    spec.support_lo = 0.0;
    spec.cdf = [alpha, beta](double x) {
        if (x <= 0.0) {
            return 0.0;
        }
        if (x > alpha) {
            return 1.0 / (1.0 + std::pow(alpha / x, beta));
        }
        const double t = std::pow(x / alpha, beta);
        return t / (1.0 + t);
    };
    spec.sf = [alpha, beta](double x) {
        if (x <= 0.0) {
            return 1.0;
        }
        return 1.0 / (1.0 + std::pow(x / alpha, beta));
    };
    spec.pdf = [alpha, beta](double x) {
        if (x < 0.0) {
            return 0.0;
        }
        if (x == 0.0) {
            if (beta == 1.0) {
                return 1.0 / alpha;
            }
            return beta > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
        }
        // beta t / (x (1 + t)^2) with t = (x/alpha)^beta; use 1/t past the scale
        const double t = std::pow(x > alpha ? alpha / x : x / alpha, beta);
        return (beta / x) * t / ((1.0 + t) * (1.0 + t));
    };
    spec.quantile = [alpha, beta](double p) {
        return alpha * std::pow(p / (1.0 - p), 1.0 / beta);
    };
    return spec;
}

NgxParams::NgxParams(double theta, double delta) : theta_(theta), delta_(delta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument("ngx: theta must be finite and > 0");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("ngx: delta must lie in the open interval (0, 1)");
    }
}

double cdf(const BaselineSpec& baseline, const NgxParams& pars, double x) {
    check_support(baseline, x);
    return -std::expm1(pars.theta() * log_ratio(baseline, pars, x));
}

double sf(const BaselineSpec& baseline, const NgxParams& pars, double x) {
    check_support(baseline, x);
    return std::exp(pars.theta() * log_ratio(baseline, pars, x));
}

double pdf(const BaselineSpec& baseline, const NgxParams& pars, double x) {
    check_support(baseline, x);
    const double f = baseline.pdf(x);
    if (f == 0.0) {
        return 0.0;
    }
    const double F = baseline.cdf(x);
    const double S = baseline_sf(baseline, x, F);
    const double theta = pars.theta();
    const double delta = pars.delta();
    double log_tail = 0.0;
    if (theta != 1.0) {
        log_tail = (theta - 1.0) * std::log(S);
    }
    const double log_value =
        std::log(theta) + std::log1p(-delta) - (theta + 1.0) * std::log1p(-delta * F) + log_tail;
    return f * std::exp(log_value);
}

double hazard(const BaselineSpec& baseline, const NgxParams& pars, double x) {
    check_support(baseline, x);
    const double F = baseline.cdf(x);
    const double S = baseline_sf(baseline, x, F);
    if (S <= 0.0) {
        throw std::overflow_error("ngx: survival underflowed to zero; hazard overflows");
    }
    const double f = baseline.pdf(x);
    return pars.theta() * (1.0 - pars.delta()) * f / (S * (1.0 - pars.delta() * F));
}

double chf(const BaselineSpec& baseline, const NgxParams& pars, double x) {
    check_support(baseline, x);
    return -pars.theta() * log_ratio(baseline, pars, x);
}

double rhr(const BaselineSpec& baseline, const NgxParams& pars, double x) {
    const double G = cdf(baseline, pars, x);
    if (G <= 0.0) {
        throw std::domain_error("ngx: reversed hazard undefined where the cdf is zero");
    }
    return pdf(baseline, pars, x) / G;
}

double quantile(const BaselineSpec& baseline, const NgxParams& pars, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("ngx: quantile probability must lie in (0, 1)");
    }
    const double log_u = std::log1p(-p) / pars.theta();
    const double u = std::exp(log_u);
    double target = -std::expm1(log_u) / (1.0 - pars.delta() * u);
    target = std::clamp(target, kQuantileClamp, 1.0 - kQuantileClamp);
    return baseline.quantile(target);
}

}  // namespace ngfisk::ngx
