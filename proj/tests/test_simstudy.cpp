#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ngfisk/simstudy.hpp"

namespace sim = ngfisk::sim;
using ngfisk::kernels::Exec;

TEST_CASE("case validation") {
    auto c = sim::reference_case(1, 40);
    CHECK_NOTHROW(c.validate());
    c.replications = 39;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = sim::reference_case(1, 40);
    c.sample_sizes = {50, 25};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.sample_sizes = {};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK_THROWS_AS(sim::reference_case(4), std::invalid_argument);
    const auto c2 = sim::reference_case(2);
    CHECK(c2.truth.beta() == 3.0);
    CHECK(c2.sample_sizes.size() == 6);
    CHECK(c2.replications == 200);
}

TEST_CASE("aggregate formulas") {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 40; ++i) {
        rows.push_back({i % 2 == 0 ? 0.0 : 2.0, 3.0});
    }
    const auto s = sim::aggregate(rows, {1.0, 3.0}, {"a", "b"});
    CHECK(s[0].mle_mean == 1.0);
    CHECK(s[0].bias == 0.0);
    CHECK(s[0].variance == 1.0);
    CHECK(s[0].mse == 1.0);
    CHECK(s[1].bias == 0.0);
    CHECK(s[1].mse == 0.0);
    CHECK(s[1].ci95.lower == 3.0);

    std::vector<std::vector<double>> shifted(40, std::vector<double>{2.5});
    const auto t = sim::aggregate(shifted, {2.0}, {"x"});
    CHECK(t[0].bias == 0.5);
    CHECK(t[0].variance == 0.0);
    CHECK(t[0].mse == 0.25);

    rows.pop_back();
    CHECK_THROWS_AS(sim::aggregate(rows, {1.0, 3.0}, {"a", "b"}), std::invalid_argument);
}

TEST_CASE("per-replicate seeds are distinct") {
    const auto c = sim::reference_case(1, 40);
    CHECK(sim::sample_seed(c, 25, 0) != sim::fit_seed(c, 25, 0));
    CHECK(sim::sample_seed(c, 25, 0) != sim::sample_seed(c, 25, 1));
    CHECK(sim::sample_seed(c, 25, 0) != sim::sample_seed(c, 50, 0));
}

TEST_CASE("run_case is deterministic and thread-count independent") {
    auto c = sim::reference_case(1, 40, 99);
    c.sample_sizes = {30, 60};
    c.starts = 3;
    const auto serial = sim::run_case(c, Exec::serial);
    omp_set_num_threads(3);
    const auto parallel = sim::run_case(c, Exec::parallel);
    REQUIRE(serial.sizes.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& a = serial.sizes[i];
        const auto& b = parallel.sizes[i];
        CHECK(a.converged == b.converged);
        CHECK(a.converged + a.excluded == 40);
        CHECK(a.convergence_rate == doctest::Approx(a.converged / 40.0));
        REQUIRE(a.params.size() == 5);
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(a.params[j].mle_mean == b.params[j].mle_mean);
            CHECK(a.params[j].mse == b.params[j].mse);
            CHECK(a.params[j].ci95.lower == b.params[j].ci95.lower);
            CHECK(a.params[j].ci95.upper == b.params[j].ci95.upper);
            CHECK(std::abs(a.params[j].mse - (a.params[j].variance + a.params[j].bias * a.params[j].bias)) <=
                  1e-12 * std::max(1.0, a.params[j].mse));
        }
        CHECK(a.params[4].name == "c");
    }
}

TEST_CASE("replicates excluded for non-convergence are counted") {
    auto c = sim::reference_case(1, 40, 5);
    c.sample_sizes = {20};
    c.starts = 1;
    const auto batch = sim::run_replicates(c, 20, Exec::serial);
    int converged = 0;
    for (bool b : batch.converged) {
        converged += b ? 1 : 0;
    }
    const auto summary = sim::run_case(c, Exec::serial);
    CHECK(summary.sizes[0].converged == converged);
    CHECK(summary.sizes[0].excluded == 40 - converged);
}
