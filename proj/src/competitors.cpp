#include "ngfisk/competitors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ngfisk::competitors {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(1 - exp(-v)) for v > 0
double log1m_exp_neg(double v) {
    return v > 0.693 ? std::log1p(-std::exp(-v)) : std::log(-std::expm1(-v));
}

// log(1 - (1 - exp(-v))^a). Past v = 30 the leading term a exp(-v) is exact
// to double precision and avoids log(0) once exp(-v) underflows.
double log1m_pow_w(double a, double v) {
    if (v > 30.0) {
        return std::log(a) - v;
    }
    return std::log(-std::expm1(a * log1m_exp_neg(v)));
}

// Gumbel-type log density term u + log(du) - exp(u); -inf once exp(u) overflows.
double log_gumbel_density(double u, double du) {
    if (u > 700.0) {
        return -kInf;
    }
    return u + std::log(du) - std::exp(u);
}

// log(exp(a) - 1) for a > 0
double log_expm1(double a) { return a > 30.0 ? a + std::log1p(-std::exp(-a)) : std::log(std::expm1(a)); }

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    out.erase(std::remove(out.begin(), out.end(), '-'), out.end());
    out.erase(std::remove(out.begin(), out.end(), '_'), out.end());
    return out;
}

double cdf_raw(Kind kind, std::span<const double> q, double x) {
    switch (kind) {
        case Kind::nexfw: {
            const double u = q[1] * std::pow(x, q[0]) + q[2] * x * x;
            return -std::expm1(-std::exp(u));
        }
        case Kind::fw: {
            const double u = q[2] * std::pow(x, q[1]) + q[3] * std::pow(x, q[0]);
            return -std::expm1(-std::exp(u));
        }
        case Kind::kwp: {
            if (x == 0.0) {
                return 0.0;
            }
            const double v = std::pow(q[3] * x, q[2]);
            const double log_k = log1m_pow_w(q[0], v);
            const double s = -std::expm1(q[1] * log_k);
            return std::expm1(-q[4] * s) / std::expm1(-q[4]);
        }
        case Kind::kuw: {
            if (x == 0.0) {
                return 0.0;
            }
            const double v = q[2] * std::pow(x, q[3]);
            const double log_k = log1m_pow_w(q[0], v);
            return -std::expm1(q[1] * log_k);
        }
        case Kind::zw: {
            const double w = -std::expm1(-q[1] * std::pow(x, q[2]));
            return std::expm1(q[0] * w) / std::expm1(q[0]);
        }
    }
    throw std::logic_error("unknown competitor kind");
}

double log_pdf_raw(Kind kind, std::span<const double> q, double x) {
    const double log_x = std::log(x);
    switch (kind) {
        case Kind::nexfw: {
            const double gamma = q[0], beta = q[1], theta = q[2];
            const double u = beta * std::pow(x, gamma) + theta * x * x;
            const double du = beta * gamma * std::pow(x, gamma - 1.0) + 2.0 * theta * x;
            return log_gumbel_density(u, du);
        }
        case Kind::fw: {
            const double alpha = q[0], gamma = q[1], beta = q[2], theta = q[3];
            const double u = beta * std::pow(x, gamma) + theta * std::pow(x, alpha);
            const double du =
                beta * gamma * std::pow(x, gamma - 1.0) + theta * alpha * std::pow(x, alpha - 1.0);
            return log_gumbel_density(u, du);
        }
        case Kind::kwp: {
            const double a = q[0], b = q[1], c = q[2], beta = q[3], lambda = q[4];
            const double log_bx = std::log(beta) + log_x;
            const double v = std::exp(c * log_bx);
            const double log_w = log1m_exp_neg(v);
            const double log_k = log1m_pow_w(a, v);
            const double s = -std::expm1(b * log_k);
            return std::log(lambda) - lambda * s + std::log(a * b) + (b - 1.0) * log_k +
                   (a - 1.0) * log_w - v + std::log(c * beta) + (c - 1.0) * log_bx -
                   std::log(-std::expm1(-lambda));
        }
        case Kind::kuw: {
            const double a = q[0], b = q[1], gamma = q[2], theta = q[3];
            const double v = gamma * std::exp(theta * log_x);
            const double log_w = log1m_exp_neg(v);
            const double log_k = log1m_pow_w(a, v);
            return std::log(a * b * gamma * theta) + (theta - 1.0) * log_x - v +
                   (a - 1.0) * log_w + (b - 1.0) * log_k;
        }
        case Kind::zw: {
            const double alpha = q[0], gamma = q[1], theta = q[2];
            const double v = gamma * std::exp(theta * log_x);
            const double w = -std::expm1(-v);
            return std::log(alpha * gamma * theta) + (theta - 1.0) * log_x - v + alpha * w -
                   log_expm1(alpha);
        }
    }
    throw std::logic_error("unknown competitor kind");
}

}  // namespace

std::string_view display_name(Kind kind) {
    switch (kind) {
        case Kind::nexfw: return "NEx-FW";
        case Kind::fw: return "FW";
        case Kind::kwp: return "KWP";
        case Kind::kuw: return "Ku-W";
        case Kind::zw: return "Z-W";
    }
    return "?";
}

Kind parse_kind(std::string_view name) {
    const std::string key = lower(name);
    for (Kind k : kAllKinds) {
        if (key == lower(display_name(k))) {
            return k;
        }
    }
    if (key == "zweibull") {
        return Kind::zw;
    }
    throw std::invalid_argument("unknown competitor model '" + std::string(name) + "'");
}

std::size_t arity(Kind kind) { return param_names(kind).size(); }

const std::vector<std::string>& param_names(Kind kind) {
    static const std::vector<std::string> nexfw{"gamma", "beta", "theta"};
    static const std::vector<std::string> fw{"alpha", "gamma", "beta", "theta"};
    static const std::vector<std::string> kwp{"a", "b", "c", "beta", "lambda"};
    static const std::vector<std::string> kuw{"a", "b", "gamma", "theta"};
    static const std::vector<std::string> zw{"alpha", "gamma", "theta"};
    switch (kind) {
        case Kind::nexfw: return nexfw;
        case Kind::fw: return fw;
        case Kind::kwp: return kwp;
        case Kind::kuw: return kuw;
        case Kind::zw: return zw;
    }
    throw std::logic_error("unknown competitor kind");
}

est::ParamBox default_box(Kind kind) {
    switch (kind) {
        case Kind::nexfw: return est::ParamBox({1e-3, 1e-4, 1e-6}, {20.0, 100.0, 100.0});
        // gamma < alpha by disjoint ranges, which removes the label switch
        case Kind::fw: return est::ParamBox({1.0, 1e-3, 1e-4, 1e-6}, {50.0, 1.0, 100.0, 100.0});
        case Kind::kwp:
            return est::ParamBox({1e-3, 1e-3, 1e-3, 1e-4, 1e-6}, {100.0, 100.0, 50.0, 100.0, 100.0});
        case Kind::kuw: return est::ParamBox({1e-3, 1e-3, 1e-4, 1e-3}, {100.0, 100.0, 1e3, 50.0});
        case Kind::zw: return est::ParamBox({1e-4, 1e-4, 1e-3}, {100.0, 1e3, 50.0});
    }
    throw std::logic_error("unknown competitor kind");
}

CompetitorModel::CompetitorModel(Kind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {
    if (params_.size() != arity(kind)) {
        throw std::invalid_argument(std::string(display_name(kind)) + " expects " +
                                    std::to_string(arity(kind)) + " parameters, got " +
                                    std::to_string(params_.size()));
    }
    for (double v : params_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string(display_name(kind)) +
                                        ": parameters must be positive and finite");
        }
    }
}

double cdf(const CompetitorModel& m, double x) {
    if (!(x >= 0.0)) {
        throw std::domain_error("competitor cdf: x must be >= 0");
    }
    return cdf_raw(m.kind(), m.params(), x);
}

double log_pdf(const CompetitorModel& m, double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("competitor pdf: x must be > 0");
    }
    return log_pdf_raw(m.kind(), m.params(), x);
}

double pdf(const CompetitorModel& m, double x) { return std::exp(log_pdf(m, x)); }

double nll(Kind kind, std::span<const double> params, std::span<const double> data) {
    for (double v : params) {
        if (!(v > 0.0)) {
            return kInf;
        }
    }
    double total = 0.0;
    for (double x : data) {
        total -= log_pdf_raw(kind, params, x);
    }
    return std::isnan(total) ? kInf : total;
}

est::ModelSpec model_spec(Kind kind) {
    std::vector<est::Scale> scales(arity(kind), est::Scale::log);
    auto guess = [kind](std::span<const double> data) -> std::vector<double> {
        const double mean =
            std::accumulate(data.begin(), data.end(), 0.0) / static_cast<double>(data.size());
        const double rate = 1.0 / mean;
        switch (kind) {
            case Kind::nexfw: return {0.7, 0.5, 0.01};
            case Kind::fw: return {2.0, 0.5, 0.5, 0.01};
            case Kind::kwp: return {1.0, 1.0, 1.0, rate, 1.0};
            case Kind::kuw: return {1.0, 1.0, rate, 1.0};
            case Kind::zw: return {1.0, rate, 1.0};
        }
        throw std::logic_error("unknown competitor kind");
    };
    return est::ModelSpec{
        std::string(display_name(kind)),
        param_names(kind),
        scales,
        default_box(kind),
        [kind](std::span<const double> q, std::span<const double> data) {
            return nll(kind, q, data);
        },
        {},
        guess,
    };
}

est::FitResult fit_competitor(Kind kind, std::span<const double> data,
                              const est::FitOptions& options) {
    return est::fit_mle(model_spec(kind), data, options);
}

}  // namespace ngfisk::competitors
