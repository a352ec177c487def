#pragma once

#include <span>
#include <vector>

namespace ngfisk::stats {

/// Hyndman–Fan type 7 sample quantile (linear interpolation between order
/// statistics at h = (n - 1) p). `sorted` must be ascending and nonempty.
double quantile_type7(std::span<const double> sorted, double p);

/// Mean and population (1/n) variance.
struct Moments {
    double mean;
    double variance;
};
Moments mean_variance(std::span<const double> values);

}  // namespace ngfisk::stats
