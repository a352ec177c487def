#include "ngfisk/estimation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ngfisk/optimizer.hpp"
#include "ngfisk/random.hpp"
#include "ngfisk/stats.hpp"

namespace ngfisk::est {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_data(std::span<const double> data) {
    if (data.empty()) {
        throw std::domain_error("log-likelihood: empty data");
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!(data[i] > 0.0) || !std::isfinite(data[i])) {
            throw std::domain_error("log-likelihood: observation " + std::to_string(i) +
                                    " is not a positive finite number");
        }
    }
}

// log(1 + e^v) without overflow
double log1p_exp(double v) { return v > 35.0 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v)); }

struct Vec4 {
    double v[4] = {0.0, 0.0, 0.0, 0.0};
    Vec4& operator+=(const Vec4& o) {
        for (int k = 0; k < 4; ++k) {
            v[k] += o.v[k];
        }
        return *this;
    }
};

double logistic(double t) {
    return t >= 0.0 ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
}

// Maps between natural parameters p, working coordinates y (log p or p)
// on the box [ylo, yhi], and unconstrained simplex coordinates t.
struct Transform {
    std::vector<Scale> scales;
    std::vector<double> lower, upper;  // natural box
    std::vector<double> ylo, yhi;

    Transform(const std::vector<Scale>& s, const ParamBox& box)
        : scales(s), lower(box.lower()), upper(box.upper()) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            const bool log_scale = s[j] == Scale::log;
            if (log_scale && !(lower[j] > 0.0)) {
                throw std::invalid_argument("log-scaled parameter needs a positive lower bound");
            }
            ylo.push_back(log_scale ? std::log(lower[j]) : lower[j]);
            yhi.push_back(log_scale ? std::log(upper[j]) : upper[j]);
        }
    }

    std::size_t size() const { return scales.size(); }

    double p_from_y(std::size_t j, double y) const {
        if (y <= ylo[j]) {
            return lower[j];
        }
        if (y >= yhi[j]) {
            return upper[j];
        }
        return std::clamp(scales[j] == Scale::log ? std::exp(y) : y, lower[j], upper[j]);
    }
    double y_from_p(std::size_t j, double p) const {
        return std::clamp(scales[j] == Scale::log ? std::log(p) : p, ylo[j], yhi[j]);
    }
    double y_from_t(std::size_t j, double t) const {
        return ylo[j] + (yhi[j] - ylo[j]) * logistic(t);
    }
    double t_from_y(std::size_t j, double y) const {
        double frac = (y - ylo[j]) / (yhi[j] - ylo[j]);
        frac = std::clamp(frac, 1e-6, 1.0 - 1e-6);
        return std::log(frac / (1.0 - frac));
    }

    std::vector<double> p_from_ys(std::span<const double> y) const {
        std::vector<double> p(y.size());
        for (std::size_t j = 0; j < y.size(); ++j) {
            p[j] = p_from_y(j, y[j]);
        }
        return p;
    }
    std::vector<double> p_from_ts(std::span<const double> t) const {
        std::vector<double> p(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) {
            p[j] = p_from_y(j, y_from_t(j, t[j]));
        }
        return p;
    }
};

double guarded_nll(const ModelSpec& model, std::span<const double> params,
                   std::span<const double> data) {
    try {
        const double v = model.nll(params, data);
        return std::isnan(v) ? kInf : v;
    } catch (const std::exception&) {
        return kInf;
    }
}

void check_fit_data(std::span<const double> data) {
    if (data.empty()) {
        throw std::invalid_argument("fit: empty data");
    }
    for (double x : data) {
        if (!(x > 0.0) || !std::isfinite(x)) {
            throw std::invalid_argument("fit: data must be positive and finite");
        }
    }
    const auto [lo, hi] = std::minmax_element(data.begin(), data.end());
    if (*lo == *hi) {
        throw std::invalid_argument(
            "fit: degenerate data (all observations equal); the likelihood has no interior maximum");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ParamBox

ParamBox::ParamBox(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size() || lower_.empty()) {
        throw std::invalid_argument("ParamBox: lower and upper must be nonempty and equally sized");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i])) {
            throw std::invalid_argument("ParamBox: lower < upper violated at index " +
                                        std::to_string(i));
        }
    }
}

void ParamBox::set_bounds(std::size_t i, double lower, double upper) {
    if (!(lower < upper)) {
        throw std::invalid_argument("ParamBox: lower < upper violated");
    }
    lower_.at(i) = lower;
    upper_.at(i) = upper;
}

ParamBox ngfisk_default_box() {
    return ParamBox({1e-4, 1e-4, 1e-2, 0.01}, {1e4, 1e3, 10.0, 0.99});
}

// ---------------------------------------------------------------------------
// Likelihood and score

double log_likelihood(const NgFiskParams& p, std::span<const double> data, kernels::Exec exec) {
    check_data(data);
    const double alpha = p.alpha();
    const double beta = p.beta();
    const double theta = p.theta();
    const double delta = p.delta();
    const double log_beta_over_alpha = std::log(beta) - std::log(alpha);

    const double sums = kernels::block_sum<double>(
        data.size(),
        [&](std::size_t i) {
            const double log_r = std::log(data[i] / alpha);
            const double log_t = beta * log_r;
            const double log1p_t = log1p_exp(log_t);                  // log(1 + t)
            const double F = std::exp(log_t - log1p_t);              // t / (1 + t)
            const double log_f = log_beta_over_alpha + (beta - 1.0) * log_r - 2.0 * log1p_t;
            const double log_S = -log1p_t;                           // log(1 - F)
            return log_f + (theta - 1.0) * log_S - (theta + 1.0) * std::log1p(-delta * F);
        },
        exec);
    const double n = static_cast<double>(data.size());
    const double value = n * std::log(theta) + n * std::log1p(-delta) + sums;
    if (std::isnan(value) || value == -kInf) {
        return -kInf;
    }
    return value;
}

double log_likelihood_reference(const NgFiskParams& p, std::span<const double> data) {
    check_data(data);
    const auto fisk = p.baseline();
    const double n = static_cast<double>(data.size());
    double sum_log_f = 0.0;
    double sum_log_S = 0.0;
    double sum_log_tilt = 0.0;
    for (double x : data) {
        sum_log_f += std::log(fisk.pdf(x));
        sum_log_S += std::log(fisk.sf(x));
        sum_log_tilt += std::log(1.0 - p.delta() * fisk.cdf(x));
    }
    return n * std::log(p.theta()) + n * std::log(1.0 - p.delta()) + sum_log_f +
           (p.theta() - 1.0) * sum_log_S - (p.theta() + 1.0) * sum_log_tilt;
}

std::array<double, 4> score(const NgFiskParams& p, std::span<const double> data,
                            kernels::Exec exec) {
    check_data(data);
    const double alpha = p.alpha();
    const double beta = p.beta();
    const double theta = p.theta();
    const double delta = p.delta();
    const double log1m_delta = std::log1p(-delta);

    const Vec4 total = kernels::block_sum<Vec4>(
        data.size(),
        [&](std::size_t i) {
            const double log_r = std::log(data[i] / alpha);
            const double log_z = log1m_delta + beta * log_r;  // z = (x / c)^beta
            const double log1p_z = log1p_exp(log_z);
            const double w = std::exp(log_z - log1p_z);        // z / (1 + z)
            Vec4 g;
            g.v[0] = (-beta + (theta + 1.0) * beta * w) / alpha;
            g.v[1] = 1.0 / beta + log_r - (theta + 1.0) * w * log_r;
            g.v[2] = 1.0 / theta - log1p_z;
            g.v[3] = (-1.0 + (theta + 1.0) * w) / (1.0 - delta);
            return g;
        },
        exec);
    return {total.v[0], total.v[1], total.v[2], total.v[3]};
}

double ridge_deviation(const NgFiskParams& p, std::span<const double> data) {
    const double base = log_likelihood(p, data);
    const double c = effective_burr(p).c;
    double worst = 0.0;
    for (double delta : {0.05, 0.5, 0.95}) {
        const double alpha = c * std::pow(1.0 - delta, 1.0 / p.beta());
        const NgFiskParams moved(alpha, p.beta(), p.theta(), delta);
        worst = std::max(worst, std::abs(log_likelihood(moved, data) - base));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Starting values

std::array<double, 4> quantile_matched_start(std::span<const double> data, double delta_start) {
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    const double q1 = stats::quantile_type7(sorted, 0.25);
    const double q2 = stats::quantile_type7(sorted, 0.5);
    const double q3 = stats::quantile_type7(sorted, 0.75);

    // Burr XII: log Q(p) = log c + L(p, theta) / beta, L = log((1 - p)^(-1/theta) - 1)
    auto L = [](double p, double theta) { return std::log(std::expm1(-std::log1p(-p) / theta)); };

    double theta = 1.0;
    double beta = 1.0;
    double c = q2 > 0.0 ? q2 : 1.0;
    if (q1 > 0.0 && q1 < q2 && q2 < q3) {
        const double target = std::log(q3 / q2) / std::log(q2 / q1);
        auto mismatch = [&](double th) {
            return std::abs((L(0.75, th) - L(0.5, th)) / (L(0.5, th) - L(0.25, th)) - target);
        };
        double best = mismatch(theta);
        for (int k = 0; k <= 200; ++k) {
            const double th = std::exp(std::log(0.05) + (std::log(10.0) - std::log(0.05)) * k / 200.0);
            const double m = mismatch(th);
            if (m < best) {
                best = m;
                theta = th;
            }
        }
        beta = (L(0.75, theta) - L(0.25, theta)) / std::log(q3 / q1);
        c = q2 / std::exp(L(0.5, theta) / beta);
    } else if (q1 > 0.0 && q3 > q1) {
        beta = std::log(9.0) / std::log(q3 / q1);  // log-logistic quartile spread
    }
    beta = std::clamp(beta, 0.05, 50.0);
    const double alpha = c * std::pow(1.0 - delta_start, 1.0 / beta);
    return {alpha, beta, theta, delta_start};
}

ModelSpec ngfisk_model(const ParamBox& box) {
    if (box.size() != 4) {
        throw std::invalid_argument("ngfisk_model: box must have 4 parameters");
    }
    ModelSpec model{
        "NG-F",
        ngfisk_param_names(),
        {Scale::log, Scale::log, Scale::log, Scale::linear},
        box,
        [](std::span<const double> q, std::span<const double> data) {
            return -log_likelihood(NgFiskParams::from_array(q), data);
        },
        [](std::span<const double> q, std::span<const double> data) {
            const auto s = score(NgFiskParams::from_array(q), data);
            return std::vector<double>{-s[0], -s[1], -s[2], -s[3]};
        },
        [](std::span<const double> data) {
            const auto start = quantile_matched_start(data);
            return std::vector<double>(start.begin(), start.end());
        },
    };
    return model;
}

// ---------------------------------------------------------------------------
// Standard errors and intervals

std::vector<std::optional<double>> observed_info_se(
    const std::function<double(std::span<const double>)>& nll, std::span<const double> params) {
    const std::size_t k = params.size();
    std::vector<std::optional<double>> out(k);
    auto eval = [&](const std::vector<double>& q) {
        try {
            return nll(q);
        } catch (const std::exception&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    std::vector<double> h(k);
    for (std::size_t i = 0; i < k; ++i) {
        h[i] = std::max(1e-4, 1e-4 * std::abs(params[i]));
    }
    const std::vector<double> x0(params.begin(), params.end());
    const double f0 = eval(x0);
    Eigen::MatrixXd H(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        auto up = x0;
        auto down = x0;
        up[i] += h[i];
        down[i] -= h[i];
        H(i, i) = (eval(up) - 2.0 * f0 + eval(down)) / (h[i] * h[i]);
        for (std::size_t j = i + 1; j < k; ++j) {
            auto pp = x0, pm = x0, mp = x0, mm = x0;
            pp[i] += h[i], pp[j] += h[j];
            pm[i] += h[i], pm[j] -= h[j];
            mp[i] -= h[i], mp[j] += h[j];
            mm[i] -= h[i], mm[j] -= h[j];
            H(i, j) = H(j, i) = (eval(pp) - eval(pm) - eval(mp) + eval(mm)) / (4.0 * h[i] * h[j]);
        }
    }
    if (!H.allFinite()) {
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(H);
    if (eig.info() != Eigen::Success) {
        return out;
    }
    const auto& lambda = eig.eigenvalues();
    const double top = lambda.maxCoeff();
    if (!(top > 0.0) || lambda.minCoeff() <= 1e-7 * top) {
        return out;
    }
    const Eigen::MatrixXd inv =
        eig.eigenvectors() * lambda.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
    for (std::size_t i = 0; i < k; ++i) {
        if (inv(i, i) > 0.0) {
            out[i] = std::sqrt(inv(i, i));
        }
    }
    return out;
}

Interval percentile_ci(std::span<const double> replicates, double level,
                       std::optional<Interval> clip) {
    if (replicates.size() < 40) {
        throw std::invalid_argument("percentile_ci: need at least 40 replicates, got " +
                                    std::to_string(replicates.size()));
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw std::invalid_argument("percentile_ci: level must lie in (0, 1)");
    }
    std::vector<double> sorted(replicates.begin(), replicates.end());
    std::sort(sorted.begin(), sorted.end());
    const double tail = 0.5 * (1.0 - level);
    Interval ci{stats::quantile_type7(sorted, tail), stats::quantile_type7(sorted, 1.0 - tail)};
    if (clip) {
        ci.lower = std::clamp(ci.lower, clip->lower, clip->upper);
        ci.upper = std::clamp(ci.upper, clip->lower, clip->upper);
    }
    return ci;
}

// ---------------------------------------------------------------------------
// Fitting

namespace {

void attach_wald(FitResult& result, const std::function<double(std::span<const double>)>& nll,
                 const ParamBox& box) {
    result.std_errors = observed_info_se(nll, result.estimates);
    result.ci95.assign(result.estimates.size(), std::nullopt);
    for (std::size_t j = 0; j < result.estimates.size(); ++j) {
        if (result.std_errors[j]) {
            const double half = 1.959963984540054 * *result.std_errors[j];
            result.ci95[j] = Interval{
                std::clamp(result.estimates[j] - half, box.lower()[j], box.upper()[j]),
                std::clamp(result.estimates[j] + half, box.lower()[j], box.upper()[j])};
        }
    }
}

}  // namespace

FitResult fit_mle(const ModelSpec& model, std::span<const double> data, const FitOptions& options) {
    check_fit_data(data);
    const std::size_t dim = model.box.size();
    if (model.param_names.size() != dim || model.scales.size() != dim) {
        throw std::invalid_argument("fit_mle: model metadata does not match its box");
    }
    if (options.starts < 1) {
        throw std::invalid_argument("fit_mle: need at least one start");
    }
    const Transform tr(model.scales, model.box);

    auto nll_t = [&](std::span<const double> t) {
        return guarded_nll(model, tr.p_from_ts(t), data);
    };
    auto nll_y = [&](std::span<const double> y) {
        return guarded_nll(model, tr.p_from_ys(y), data);
    };
    auto grad_y = [&](std::span<const double> y) {
        const std::vector<double> p = tr.p_from_ys(y);
        std::vector<double> g(dim);
        if (model.nll_gradient) {
            try {
                g = model.nll_gradient(p, data);
            } catch (const std::exception&) {
                std::fill(g.begin(), g.end(), std::numeric_limits<double>::quiet_NaN());
            }
            for (std::size_t j = 0; j < dim; ++j) {
                if (tr.scales[j] == Scale::log) {
                    g[j] *= p[j];
                }
            }
            return g;
        }
        std::vector<double> yy(y.begin(), y.end());
        for (std::size_t j = 0; j < dim; ++j) {
            const double h = 1e-6 * std::max(1.0, std::abs(yy[j]));
            const double keep = yy[j];
            yy[j] = keep + h;
            const double up = nll_y(yy);
            yy[j] = keep - h;
            const double down = nll_y(yy);
            yy[j] = keep;
            g[j] = (up - down) / (2.0 * h);
        }
        return g;
    };

    // start 0: model heuristic; the rest: Latin-hypercube jitter around it
    std::vector<std::vector<double>> starts_y;
    {
        const std::vector<double> guess = model.initial_guess(data);
        std::vector<double> y0(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            y0[j] = tr.y_from_p(j, std::clamp(guess.at(j), model.box.lower()[j], model.box.upper()[j]));
        }
        starts_y.push_back(y0);
        const int extra = options.starts - 1;
        if (extra > 0) {
            std::mt19937_64 engine(derive_seed(options.seed, 0x1a7e));
            std::vector<std::vector<int>> strata(dim);
            for (auto& column : strata) {
                column.resize(static_cast<std::size_t>(extra));
                std::iota(column.begin(), column.end(), 0);
                std::shuffle(column.begin(), column.end(), engine);
            }
            for (int s = 0; s < extra; ++s) {
                std::vector<double> y(dim);
                for (std::size_t j = 0; j < dim; ++j) {
                    const double u = (strata[j][static_cast<std::size_t>(s)] + open_uniform(engine)) /
                                     extra;
                    const double half_width =
                        tr.scales[j] == Scale::log ? 1.5 : 0.35 * (tr.yhi[j] - tr.ylo[j]);
                    y[j] = std::clamp(y0[j] + half_width * (2.0 * u - 1.0), tr.ylo[j], tr.yhi[j]);
                }
                starts_y.push_back(std::move(y));
            }
        }
    }

    FitResult result;
    result.model = model.name;
    result.param_names = model.param_names;
    result.n_obs = data.size();
    bool have_incumbent = false;
    std::vector<double> best_y;
    double best_value = kInf;

    for (const auto& y0 : starts_y) {
        std::vector<double> t0(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            t0[j] = tr.t_from_y(j, y0[j]);
        }
        const auto simplex = opt::nelder_mead(nll_t, t0);
        std::vector<double> y(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            y[j] = tr.y_from_t(j, simplex.x[j]);
        }
        const auto refined = opt::projected_gradient(nll_y, grad_y, y, tr.ylo, tr.yhi);
        const bool better_refine = refined.value <= simplex.value;
        const std::vector<double>& y_final = better_refine ? refined.x : y;
        const double value = better_refine ? refined.value : simplex.value;

        RestartRecord record;
        record.start = tr.p_from_ys(y0);
        record.estimates = tr.p_from_ys(y_final);
        record.nll = value;
        record.converged = refined.converged || simplex.converged;
        // replace the incumbent only on strict improvement so ties along flat
        // directions keep the earlier (heuristic) solution
        const double margin = 1e-9 * std::max(1.0, std::abs(best_value));
        if (!have_incumbent || value < best_value - margin) {
            record.accepted = true;
            have_incumbent = std::isfinite(value);
            best_value = value;
            best_y = y_final;
            result.converged = record.converged;
            result.gradient_norm = refined.gradient_norm;
            result.simplex_diameter = simplex.diameter;
        }
        result.restarts.push_back(std::move(record));
    }

    if (best_y.empty()) {
        best_y = starts_y.front();
    }
    result.estimates = tr.p_from_ys(best_y);
    result.nll = best_value;
    result.loglik = -best_value;
    result.at_boundary.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const double p = result.estimates[j];
        result.at_boundary[j] = std::abs(p - model.box.lower()[j]) <= 1e-6 ||
                                std::abs(p - model.box.upper()[j]) <= 1e-6;
    }

    result.std_errors.assign(dim, std::nullopt);
    result.ci95.assign(dim, std::nullopt);
    if (options.std_errors && std::isfinite(best_value)) {
        attach_wald(result, [&](std::span<const double> q) { return model.nll(q, data); },
                    model.box);
    }
    return result;
}

namespace {

// The likelihood is flat along constant c = alpha (1 - delta)^(-1/beta), so the
// search leaves delta wherever the simplex happened to drift. Move the optimum
// along that curve back to the delta its winning restart started from, which
// makes delta-hat a deterministic function of the start rather than of
// simplex noise. Skipped if the move leaves the box or changes the nll.
void settle_on_ridge(FitResult& result, const ParamBox& box, std::span<const double> data) {
    const RestartRecord* winner = nullptr;
    for (const auto& r : result.restarts) {
        if (r.accepted) {
            winner = &r;
        }
    }
    if (winner == nullptr || !std::isfinite(result.nll)) {
        return;
    }
    const auto& e = result.estimates;
    const double delta = winner->start[3];
    const double c = effective_burr(NgFiskParams::from_array(e)).c;
    const double alpha = c * std::pow(1.0 - delta, 1.0 / e[1]);
    if (!(alpha >= box.lower()[0] && alpha <= box.upper()[0])) {
        return;
    }
    const NgFiskParams moved(alpha, e[1], e[2], delta);
    const double nll = -log_likelihood(moved, data);
    if (!(std::abs(nll - result.nll) <= 1e-9 * std::max(1.0, std::abs(result.nll)))) {
        return;
    }
    result.estimates[0] = alpha;
    result.estimates[3] = delta;
    for (std::size_t j : {std::size_t{0}, std::size_t{3}}) {
        result.at_boundary[j] = std::abs(result.estimates[j] - box.lower()[j]) <= 1e-6 ||
                                std::abs(result.estimates[j] - box.upper()[j]) <= 1e-6;
    }
}

}  // namespace

FitResult fit_ngfisk(std::span<const double> data, const ParamBox& box, const FitOptions& options) {
    check_fit_data(data);
    FitResult result;
    if (options.fixed_delta) {
        const double delta = *options.fixed_delta;
        if (!(delta > 0.0 && delta < 1.0)) {
            throw std::invalid_argument("fixed delta must lie in (0, 1)");
        }
        ParamBox sub({box.lower()[0], box.lower()[1], box.lower()[2]},
                     {box.upper()[0], box.upper()[1], box.upper()[2]});
        ModelSpec profile{
            "NG-F",
            {"alpha", "beta", "theta"},
            {Scale::log, Scale::log, Scale::log},
            sub,
            [delta](std::span<const double> q, std::span<const double> d) {
                return -log_likelihood(NgFiskParams(q[0], q[1], q[2], delta), d);
            },
            [delta](std::span<const double> q, std::span<const double> d) {
                const auto s = score(NgFiskParams(q[0], q[1], q[2], delta), d);
                return std::vector<double>{-s[0], -s[1], -s[2]};
            },
            [delta](std::span<const double> d) {
                const auto start = quantile_matched_start(d, delta);
                return std::vector<double>{start[0], start[1], start[2]};
            },
        };
        result = fit_mle(profile, data, options);
        result.param_names = ngfisk_param_names();
        result.estimates.push_back(delta);
        result.std_errors.push_back(std::nullopt);
        result.ci95.push_back(std::nullopt);
        result.at_boundary.push_back(false);
        result.profile_std_errors = result.std_errors;
        for (auto& r : result.restarts) {
            r.start.push_back(delta);
            r.estimates.push_back(delta);
        }
    } else {
        FitOptions search = options;
        search.std_errors = false;
        result = fit_mle(ngfisk_model(box), data, search);
        settle_on_ridge(result, box, data);
        if (options.std_errors) {
            attach_wald(
                result,
                [&](std::span<const double> q) {
                    return -log_likelihood(NgFiskParams::from_array(q), data);
                },
                box);
            const double delta = result.estimates[3];
            std::vector<double> head(result.estimates.begin(), result.estimates.begin() + 3);
            result.profile_std_errors = observed_info_se(
                [&](std::span<const double> q) {
                    return -log_likelihood(NgFiskParams(q[0], q[1], q[2], delta), data);
                },
                head);
            result.profile_std_errors.push_back(std::nullopt);
        }
    }
    const auto fitted = NgFiskParams::from_array(result.estimates);
    result.effective_scale = effective_burr(fitted).c;
    const double tolerance = 1e-9 * std::max(1.0, static_cast<double>(data.size()) / 1000.0);
    result.ridge = ridge_deviation(fitted, data) < tolerance;
    return result;
}

}  // namespace ngfisk::est
