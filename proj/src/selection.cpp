#include "ngfisk/selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace ngfisk::selection {

InfoCriteria info_criteria(double nll, int k, int n) {
    if (k < 0 || n <= k + 1) {
        throw std::domain_error("info_criteria: need n > k + 1 (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
    }
    const double kd = k;
    const double nd = n;
    InfoCriteria ic{};
    ic.aic = 2.0 * kd + 2.0 * nll;
    ic.bic = kd * std::log(nd) + 2.0 * nll;
    ic.caic = ic.aic + 2.0 * kd * (kd + 1.0) / (nd - kd - 1.0);
    ic.hqic = 2.0 * kd * std::log(std::log(nd)) + 2.0 * nll;
    return ic;
}

double cramer_von_mises(std::span<const double> data, const std::function<double(double)>& cdf) {
    if (data.empty()) {
        throw std::invalid_argument("cramer_von_mises: empty data");
    }
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double w2 = 1.0 / (12.0 * n);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double d = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n) - cdf(sorted[i]);
        w2 += d * d;
    }
    return w2;
}

ModelScore make_score(std::string name, int k, int n, double nll, double cm) {
    const InfoCriteria ic = info_criteria(nll, k, n);
    return {std::move(name), k, n, nll, ic.aic, ic.bic, ic.caic, ic.hqic, cm};
}

std::vector<ModelScore> rank_models(std::vector<ModelScore> scores) {
    std::sort(scores.begin(), scores.end(), [](const ModelScore& a, const ModelScore& b) {
        return std::tie(a.aic, a.bic, a.name) < std::tie(b.aic, b.bic, b.name);
    });
    return scores;
}

}  // namespace ngfisk::selection
