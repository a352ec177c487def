#include "ngfisk/stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ngfisk::stats {

double quantile_type7(std::span<const double> sorted, double p) {
    if (sorted.empty()) {
        throw std::invalid_argument("quantile_type7: empty sample");
    }
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

Moments mean_variance(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("mean_variance: empty sample");
    }
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return {mean, ss / n};
}

}  // namespace ngfisk::stats
