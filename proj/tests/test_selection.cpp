#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ngfisk/selection.hpp"

namespace sel = ngfisk::selection;

TEST_CASE("information criteria formulas") {
    const auto ic = sel::info_criteria(101.32, 4, 101);
    CHECK(ic.aic == doctest::Approx(210.64));
    CHECK(ic.aic == doctest::Approx(210.65).epsilon(0.01 / 210.65));
    CHECK(ic.bic == doctest::Approx(4 * std::log(101.0) + 202.64));
    CHECK(ic.caic == doctest::Approx(210.64 + 40.0 / 96.0));
    CHECK(ic.hqic == doctest::Approx(8 * std::log(std::log(101.0)) + 202.64));

    const auto zero = sel::info_criteria(0.0, 0, 3);
    CHECK(zero.aic == 0.0);
    CHECK(zero.bic == 0.0);
    CHECK(zero.caic == 0.0);
    CHECK(zero.hqic == 0.0);

    // k = 4, n = 101: aic = 8 + 2 nll
    CHECK(sel::info_criteria(103.54, 4, 101).aic == doctest::Approx(215.08));

    CHECK_THROWS_AS(sel::info_criteria(1.0, 4, 5), std::domain_error);
    CHECK_THROWS_AS(sel::info_criteria(1.0, 4, 4), std::domain_error);
}

TEST_CASE("criteria increase strictly in nll") {
    for (int k : {1, 3, 5}) {
        const auto a = sel::info_criteria(50.0, k, 60);
        const auto b = sel::info_criteria(50.001, k, 60);
        CHECK(b.aic > a.aic);
        CHECK(b.bic > a.bic);
        CHECK(b.caic > a.caic);
        CHECK(b.hqic > a.hqic);
    }
}

TEST_CASE("Cramer-von Mises statistic") {
    const std::vector<double> one{3.0};
    CHECK(sel::cramer_von_mises(one, [](double) { return 0.9; }) ==
          doctest::Approx(1.0 / 12.0 + 0.16));
    CHECK(sel::cramer_von_mises(one, [](double) { return 0.9; }) == doctest::Approx(0.2433).epsilon(1e-3));

    // a cdf hitting the plotting positions exactly gives the floor 1/(12n)
    const std::vector<double> data{5.0, 1.0, 4.0, 2.0, 3.0};
    auto perfect = [](double x) { return (2.0 * x - 1.0) / 10.0; };
    CHECK(sel::cramer_von_mises(data, perfect) == doctest::Approx(1.0 / 60.0).epsilon(1e-14));

    // floor holds for arbitrary cdfs; invariant under a monotone data transform
    auto logistic = [](double x) { return 1.0 / (1.0 + std::exp(-x)); };
    const std::vector<double> xs{-1.3, 0.2, 0.7, 2.2, -0.4, 1.1};
    std::vector<double> ex;
    for (double x : xs) {
        ex.push_back(std::exp(x));
    }
    const double w = sel::cramer_von_mises(xs, logistic);
    CHECK(w >= 1.0 / 72.0);
    CHECK(sel::cramer_von_mises(ex, [&](double y) { return logistic(std::log(y)); }) ==
          doctest::Approx(w).epsilon(1e-14));
    CHECK_THROWS_AS(sel::cramer_von_mises(std::vector<double>{}, logistic), std::invalid_argument);
}

TEST_CASE("ranking order, ties and permutation invariance") {
    const std::vector<sel::ModelScore> table{
        sel::make_score("NG-F", 4, 101, 101.32, 0.09),  sel::make_score("Ku-W", 4, 101, 103.54, 0.1),
        sel::make_score("Z-W", 3, 101, 105.67, 0.1),    sel::make_score("KWP", 5, 101, 105.0, 0.1),
        sel::make_score("FW", 4, 101, 120.0, 0.1),      sel::make_score("NEx-FW", 3, 101, 140.0, 0.1)};
    const auto ranked = sel::rank_models(table);
    const std::vector<std::string> want{"NG-F", "Ku-W", "Z-W", "KWP", "FW", "NEx-FW"};
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(ranked[i].name == want[i]);
    }
    auto shuffled = table;
    std::reverse(shuffled.begin(), shuffled.end());
    std::rotate(shuffled.begin(), shuffled.begin() + 2, shuffled.end());
    const auto again = sel::rank_models(shuffled);
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(again[i].name == want[i]);
    }

    // equal AIC: BIC decides (fewer parameters -> smaller BIC here), then name
    const auto a = sel::make_score("b-model", 2, 50, 10.0, 0.0);
    const auto b = sel::make_score("a-model", 2, 50, 10.0, 0.0);
    const auto tie = sel::rank_models({a, b});
    CHECK(tie[0].name == "a-model");
    CHECK(sel::rank_models({a}).size() == 1);
}

TEST_CASE("score rows carry consistent criteria") {
    const auto s = sel::make_score("X", 3, 40, 55.5, 0.12);
    const auto ic = sel::info_criteria(55.5, 3, 40);
    CHECK(s.aic == ic.aic);
    CHECK(s.bic == ic.bic);
    CHECK(s.caic == ic.caic);
    CHECK(s.hqic == ic.hqic);
    CHECK(s.cm == 0.12);
}
