#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ngfisk/dataset.hpp"
#include "ngfisk/estimation.hpp"
#include "ngfisk/optimizer.hpp"
#include "oracles.hpp"

using ngfisk::NgFiskParams;
namespace est = ngfisk::est;

namespace {

NgFiskParams lib(const oracle::Params& p) { return NgFiskParams(p.alpha, p.beta, p.theta, p.delta); }

double oracle_loglik(const oracle::Params& p, const std::vector<double>& data) {
    double s = 0.0;
    for (double x : data) {
        s += std::log(oracle::pdf(p, x));
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// optimizer

TEST_CASE("Nelder-Mead finds the minimum of a shifted quadratic") {
    auto f = [](std::span<const double> x) {
        return 2.0 * (x[0] - 1.0) * (x[0] - 1.0) + 12.5 * (x[1] + 2.0) * (x[1] + 2.0) + 3.0;
    };
    const auto r = ngfisk::opt::nelder_mead(f, {5.0, 5.0});
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("Nelder-Mead handles Rosenbrock and non-finite regions") {
    auto rosen = [](std::span<const double> x) {
        if (x[0] < -1.5) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
    };
    ngfisk::opt::NelderMeadOptions o;
    o.max_evaluations = 20000;
    const auto r = ngfisk::opt::nelder_mead(rosen, {-1.2, 1.0}, o);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("projected gradient stops on an active bound") {
    auto f = [](std::span<const double> x) { return (x[0] - 3.0) * (x[0] - 3.0) + x[1] * x[1]; };
    auto g = [](std::span<const double> x) {
        return std::vector<double>{2.0 * (x[0] - 3.0), 2.0 * x[1]};
    };
    const std::vector<double> lo{-1.0, -1.0}, hi{2.0, 1.0};
    const auto r = ngfisk::opt::projected_gradient(f, g, {0.0, 0.5}, lo, hi);
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(2.0));
    CHECK(std::abs(r.x[1]) < 1e-5);
}

// ---------------------------------------------------------------------------
// boxes and summaries

TEST_CASE("parameter boxes validate their bounds") {
    CHECK_THROWS_AS(est::ParamBox({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(est::ParamBox({1.0, 0.0}, {2.0}), std::invalid_argument);
    auto box = est::ngfisk_default_box();
    CHECK(box.bounds(2).upper == 10.0);
    CHECK(box.bounds(3).lower == 0.01);
    CHECK_THROWS_AS(box.set_bounds(0, 5.0, 1.0), std::invalid_argument);
    box.set_bounds(2, 0.5, 20.0);
    CHECK(box.bounds(2).upper == 20.0);
}

TEST_CASE("percentile intervals") {
    std::vector<double> reps(100);
    std::iota(reps.begin(), reps.end(), 1.0);
    const auto ci = est::percentile_ci(reps);
    CHECK(ci.lower == doctest::Approx(3.475));
    CHECK(ci.upper == doctest::Approx(97.525));
    const auto flat = est::percentile_ci(std::vector<double>(40, 2.5));
    CHECK(flat.lower == 2.5);
    CHECK(flat.upper == 2.5);
    const auto clipped = est::percentile_ci(reps, 0.95, est::Interval{10.0, 90.0});
    CHECK(clipped.lower == 10.0);
    CHECK(clipped.upper == 90.0);
    CHECK_THROWS_AS(est::percentile_ci(std::vector<double>(39, 1.0)), std::invalid_argument);
}

TEST_CASE("observed-information standard errors") {
    auto quad = [](std::span<const double> p) {
        return 0.5 * (4.0 * p[0] * p[0] + 25.0 * p[1] * p[1]);
    };
    const std::vector<double> at{0.3, -0.2};
    const auto se = est::observed_info_se(quad, at);
    REQUIRE(se[0].has_value());
    REQUIRE(se[1].has_value());
    CHECK(*se[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(*se[1] == doctest::Approx(0.2).epsilon(1e-6));

    auto flat = [](std::span<const double> p) { return (p[0] + p[1]) * (p[0] + p[1]); };
    const auto none = est::observed_info_se(flat, at);
    CHECK_FALSE(none[0].has_value());
    CHECK_FALSE(none[1].has_value());
}

// ---------------------------------------------------------------------------
// likelihood and score

TEST_CASE("log-likelihood against the written-out density") {
    CHECK(est::log_likelihood(NgFiskParams(1.0, 1.0, 1.0, 1e-12), std::vector<double>{1.0}) ==
          doctest::Approx(std::log(0.25)).epsilon(1e-10));
    oracle::ParamDraws rng(31);
    for (int i = 0; i < 50; ++i) {
        const auto op = rng.next();
        const auto data = ngfisk::sample(lib(op), 60, 1000 + i);
        const double want = oracle_loglik(op, data);
        CHECK(est::log_likelihood(lib(op), data) == doctest::Approx(want).epsilon(1e-9));
        CHECK(est::log_likelihood_reference(lib(op), data) == doctest::Approx(want).epsilon(1e-9));
    }
    const std::vector<double> one{0.7};
    CHECK(est::log_likelihood(lib({1.5, 2.0, 2.5, 0.25}), one) ==
          doctest::Approx(std::log(oracle::pdf({1.5, 2.0, 2.5, 0.25}, 0.7))).epsilon(1e-12));
}

TEST_CASE("log-likelihood input errors") {
    const NgFiskParams p(1.0, 2.0, 1.0, 0.5);
    CHECK_THROWS_AS(est::log_likelihood(p, std::vector<double>{}), std::domain_error);
    CHECK_THROWS_AS(est::log_likelihood(p, std::vector<double>{1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(est::log_likelihood(p, std::vector<double>{-2.0}), std::domain_error);
}

TEST_CASE("dataFT at the published NG-F estimates") {
    const auto& data = ngfisk::data::dataft();
    const oracle::Params op{5.991, 0.982, 10.0, 0.373};
    const double want = oracle_loglik(op, data);
    CHECK(est::log_likelihood(lib(op), data) == doctest::Approx(want).epsilon(1e-10));
    // the published estimates reproduce -103.29 on this data, not -101.32
    CHECK(want == doctest::Approx(-103.29).epsilon(1e-4));
}

TEST_CASE("score matches finite differences") {
    oracle::ParamDraws rng(32);
    for (int i = 0; i < 50; ++i) {
        const auto op = rng.next();
        const auto data = ngfisk::sample(lib(op), 40, 2000 + i);
        const auto s = est::score(lib(op), data);
        const std::array<double, 4> base{op.alpha, op.beta, op.theta, op.delta};
        for (std::size_t j = 0; j < 4; ++j) {
            auto f = [&](double v) {
                auto q = base;
                q[j] = v;
                return oracle_loglik({q[0], q[1], q[2], q[3]}, data);
            };
            const double h = 1e-6 * std::max(1.0, std::abs(base[j]));
            const double fd = oracle::central_difference(f, base[j], h);
            const double scale = std::max(1.0, std::abs(fd));
            CHECK(std::abs(s[j] - fd) / scale < 1e-5);
        }
    }
}

TEST_CASE("score theta component at n = 1, theta = 1") {
    const NgFiskParams p(2.0, 1.5, 1.0, 1e-12);
    const double x = 1.3;
    const double F = oracle::cdf({2.0, 1.5, 1.0, 0.0}, x);
    CHECK(est::score(p, std::vector<double>{x})[2] == doctest::Approx(1.0 + std::log(1.0 - F)).epsilon(1e-9));
}

TEST_CASE("log-likelihood is flat along constant c") {
    oracle::ParamDraws rng(33);
    for (int i = 0; i < 30; ++i) {
        const auto op = rng.next();
        const auto p = lib(op);
        const auto data = ngfisk::sample(p, 100, 3000 + i);
        const double base = est::log_likelihood(p, data);
        const double c = ngfisk::effective_burr(p).c;
        for (double d : {0.02, 0.3, 0.7, 0.98}) {
            const NgFiskParams q(c * std::pow(1.0 - d, 1.0 / op.beta), op.beta, op.theta, d);
            CHECK(std::abs(est::log_likelihood(q, data) - base) < 1e-9);
        }
        CHECK(est::ridge_deviation(p, data) < 1e-9);
    }
}

// ---------------------------------------------------------------------------
// fitting

TEST_CASE("degenerate data is rejected") {
    CHECK_THROWS_AS(est::fit_ngfisk(std::vector<double>{2.0}), std::invalid_argument);
    CHECK_THROWS_AS(est::fit_ngfisk(std::vector<double>{2.0, 2.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(est::fit_ngfisk(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(est::fit_ngfisk(std::vector<double>{1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("fit invariants on simulated data") {
    const NgFiskParams truth(1.5, 2.0, 2.5, 0.25);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto data = ngfisk::sample(truth, 200, seed);
        const auto fit = est::fit_ngfisk(data);
        CHECK(fit.loglik == -fit.nll);
        CHECK(fit.n_obs == 200);
        CHECK(fit.loglik >= est::log_likelihood(truth, data) - 1e-9);
        REQUIRE(fit.ridge.has_value());
        CHECK(*fit.ridge);
        REQUIRE(fit.effective_scale.has_value());
        CHECK(*fit.effective_scale ==
              doctest::Approx(ngfisk::effective_burr(NgFiskParams::from_array(fit.estimates)).c));
        const auto box = est::ngfisk_default_box();
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(fit.estimates[j] >= box.lower()[j]);
            CHECK(fit.estimates[j] <= box.upper()[j]);
            const bool near = std::abs(fit.estimates[j] - box.lower()[j]) <= 1e-6 ||
                              std::abs(fit.estimates[j] - box.upper()[j]) <= 1e-6;
            CHECK(fit.at_boundary[j] == near);
            if (fit.ci95[j]) {
                CHECK(fit.ci95[j]->lower >= box.lower()[j]);
                CHECK(fit.ci95[j]->upper <= box.upper()[j]);
            }
        }
        // accepted restarts never lose likelihood
        double incumbent = std::numeric_limits<double>::infinity();
        for (const auto& r : fit.restarts) {
            if (r.accepted) {
                CHECK(r.nll <= incumbent);
                incumbent = r.nll;
            }
        }
        CHECK(fit.nll <= incumbent + 1e-9 * std::max(1.0, std::abs(incumbent)));
    }
}

TEST_CASE("interior optimum has a vanishing score in the identified directions") {
    const NgFiskParams truth(1.5, 2.0, 2.5, 0.25);
    const auto data = ngfisk::sample(truth, 500, 77);
    const auto fit = est::fit_ngfisk(data);
    REQUIRE(fit.converged);
    if (std::none_of(fit.at_boundary.begin(), fit.at_boundary.end(), [](bool b) { return b; })) {
        const auto s = est::score(NgFiskParams::from_array(fit.estimates), data);
        for (double v : s) {
            CHECK(std::abs(v) < 1e-3);
        }
    }
}

TEST_CASE("fits are deterministic in the seed") {
    const auto data = ngfisk::sample(NgFiskParams(1.0, 3.0, 2.5, 0.5), 150, 4);
    est::FitOptions o;
    o.seed = 17;
    const auto a = est::fit_ngfisk(data, est::ngfisk_default_box(), o);
    const auto b = est::fit_ngfisk(data, est::ngfisk_default_box(), o);
    CHECK(a.estimates == b.estimates);
    CHECK(a.nll == b.nll);
}

TEST_CASE("beta is recovered at n = 500 in most seeds") {
    const NgFiskParams truth(1.5, 2.0, 2.5, 0.25);
    int inside = 0;
    const int seeds = 100;
    for (int s = 0; s < seeds; ++s) {
        const auto data = ngfisk::sample(truth, 500, 5000 + s);
        est::FitOptions o;
        o.std_errors = false;
        o.seed = s;
        const auto fit = est::fit_ngfisk(data, est::ngfisk_default_box(), o);
        inside += (fit.estimates[1] > 1.767 && fit.estimates[1] < 2.250) ? 1 : 0;
    }
    CHECK(inside >= 90);
}

TEST_CASE("fixed-delta mode profiles the remaining parameters") {
    const auto data = ngfisk::sample(NgFiskParams(1.5, 2.0, 2.5, 0.25), 300, 9);
    est::FitOptions o;
    o.fixed_delta = 0.6;
    const auto fixed = est::fit_ngfisk(data, est::ngfisk_default_box(), o);
    const auto free = est::fit_ngfisk(data);
    CHECK(fixed.estimates[3] == 0.6);
    CHECK_FALSE(fixed.std_errors[3].has_value());
    // the ridge makes fixing delta free of cost
    CHECK(fixed.nll == doctest::Approx(free.nll).epsilon(1e-7));
    CHECK(*fixed.effective_scale == doctest::Approx(*free.effective_scale).epsilon(1e-4));
    o.fixed_delta = 1.0;
    CHECK_THROWS_AS(est::fit_ngfisk(data, est::ngfisk_default_box(), o), std::invalid_argument);
}

TEST_CASE("fits with equal (c, beta, theta) give identical curves") {
    const auto data = ngfisk::sample(NgFiskParams(1.0, 3.0, 2.5, 0.5), 200, 12);
    est::FitOptions o;
    o.fixed_delta = 0.2;
    const auto a = est::fit_ngfisk(data, est::ngfisk_default_box(), o);
    const auto pa = NgFiskParams::from_array(a.estimates);
    const double c = *a.effective_scale;
    const NgFiskParams pb(c * std::pow(1.0 - 0.8, 1.0 / pa.beta()), pa.beta(), pa.theta(), 0.8);
    CHECK(std::abs(est::log_likelihood(pb, data) + a.nll) < 1e-8);
    for (int k = 1; k <= 50; ++k) {
        const double x = 0.05 * k;
        CHECK(std::abs(ngfisk::cdf(pa, x) - ngfisk::cdf(pb, x)) < 1e-10);
    }
}

TEST_CASE("standard errors shrink like 1/sqrt(n)") {
    const NgFiskParams truth(1.5, 2.0, 2.5, 0.25);
    std::vector<double> ratios;
    for (int s = 0; s < 100; ++s) {
        est::FitOptions o;
        o.seed = s;
        o.starts = 4;
        const auto small = est::fit_ngfisk(ngfisk::sample(truth, 125, 9000 + s), est::ngfisk_default_box(), o);
        const auto large = est::fit_ngfisk(ngfisk::sample(truth, 500, 9500 + s), est::ngfisk_default_box(), o);
        if (small.profile_std_errors[1] && large.profile_std_errors[1]) {
            ratios.push_back(*large.profile_std_errors[1] / *small.profile_std_errors[1]);
        }
    }
    REQUIRE(ratios.size() >= 80);
    std::sort(ratios.begin(), ratios.end());
    const double median = ratios[ratios.size() / 2];
    CHECK(median > 0.4);
    CHECK(median < 0.6);
}

TEST_CASE("dataFT NG-F fit") {
    const auto& data = ngfisk::data::dataft();
    const auto fit = est::fit_ngfisk(data);
    CHECK(fit.at_boundary[2]);
    CHECK(fit.estimates[2] == doctest::Approx(10.0).epsilon(1e-7));
    CHECK(fit.estimates[1] == doctest::Approx(0.982).epsilon(0.05 / 0.982));
    CHECK(*fit.ridge);
    // the 4-parameter Hessian is singular along the ridge
    CHECK_FALSE(fit.std_errors[1].has_value());

    // Profile SE of beta from an independent central-difference Hessian in
    // (log c, beta) with theta at its bound and delta fixed.
    const double c = *fit.effective_scale;
    const double b = fit.estimates[1];
    auto nll2 = [&](double cc, double bb) {
        return -oracle_loglik({cc, bb, 10.0, 1e-12}, data);
    };
    const double hc = 1e-4 * c, hb = 1e-4;
    const double f00 = nll2(c, b);
    const double fcc = (nll2(c + hc, b) - 2 * f00 + nll2(c - hc, b)) / (hc * hc);
    const double fbb = (nll2(c, b + hb) - 2 * f00 + nll2(c, b - hb)) / (hb * hb);
    const double fcb = (nll2(c + hc, b + hb) - nll2(c + hc, b - hb) - nll2(c - hc, b + hb) +
                        nll2(c - hc, b - hb)) / (4 * hc * hb);
    const double se_beta_2 = std::sqrt(fcc / (fcc * fbb - fcb * fcb));
    CHECK(se_beta_2 == doctest::Approx(0.079).epsilon(0.05));
    // with theta free the interval widens; the library's profile SE (alpha, beta, theta)
    REQUIRE(fit.profile_std_errors[1].has_value());
    CHECK(*fit.profile_std_errors[1] >= se_beta_2);
    auto nll3 = [&](const std::array<double, 3>& q) {
        return -oracle_loglik({q[0], q[1], q[2], 1e-12}, data);
    };
    const std::array<double, 3> at{c, b, 10.0};
    const std::array<double, 3> h{1e-4 * c, 1e-4, 1e-3};
    double H[3][3];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            auto shifted = [&](double si, double sj) {
                auto q = at;
                q[i] += si * h[i];
                q[j] += sj * h[j];
                return nll3(q);
            };
            H[i][j] = (shifted(1, 1) - shifted(1, -1) - shifted(-1, 1) + shifted(-1, -1)) /
                      (4 * h[i] * h[j]);
        }
    }
    const double det = H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1]) -
                       H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0]) +
                       H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0]);
    const double inv_bb = (H[0][0] * H[2][2] - H[0][2] * H[2][0]) / det;
    CHECK(*fit.profile_std_errors[1] == doctest::Approx(std::sqrt(inv_bb)).epsilon(0.02));
}
