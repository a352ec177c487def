#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ngfisk::selection {

struct InfoCriteria {
    double aic;
    double bic;
    double caic;
    double hqic;
};

/// aic = 2k + 2 nll, bic = k log n + 2 nll, caic = aic + 2k(k+1)/(n-k-1),
/// hqic = 2k log log n + 2 nll. Throws std::domain_error unless n > k + 1.
InfoCriteria info_criteria(double nll, int k, int n);

/// W^2 = 1/(12n) + sum_i ((2i-1)/(2n) - F(x_(i)))^2 over the sorted sample.
double cramer_von_mises(std::span<const double> data, const std::function<double(double)>& cdf);

struct ModelScore {
    std::string name;
    int k = 0;
    int n = 0;
    double nll = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    double caic = 0.0;
    double hqic = 0.0;
    double cm = 0.0;
};

ModelScore make_score(std::string name, int k, int n, double nll, double cm);

/// Ascending AIC, ties broken by BIC, then name.
std::vector<ModelScore> rank_models(std::vector<ModelScore> scores);

}  // namespace ngfisk::selection
