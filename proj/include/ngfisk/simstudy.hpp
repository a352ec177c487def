#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ngfisk/distribution.hpp"
#include "ngfisk/estimation.hpp"
#include "ngfisk/kernels.hpp"

namespace ngfisk::sim {

struct SimCase {
    NgFiskParams truth;
    std::vector<int> sample_sizes;
    int replications = 200;
    std::uint64_t seed = 2024;
    est::ParamBox box = est::ngfisk_default_box();
    int starts = 8;

    /// Throws std::invalid_argument: replications >= 40, sizes positive and ascending.
    void validate() const;
};

/// Parameter settings of the three reference scenarios:
///   1: (1.5, 2.0, 2.5, 0.25)   2: (1.0, 3.0, 2.5, 0.5)   3: (1.5, 3.5, 2.0, 0.75)
/// with n in {25, 50, 100, 150, 250, 500}.
SimCase reference_case(int which, int replications = 200, std::uint64_t seed = 2024);

struct ParamSummary {
    std::string name;
    double truth = 0.0;
    double mle_mean = 0.0;
    double variance = 0.0;  // 1/R denominator
    double bias = 0.0;
    double mse = 0.0;       // variance + bias^2
    est::Interval ci95{0.0, 0.0};
};

struct SizeSummary {
    int n = 0;
    int replications = 0;
    int converged = 0;
    int excluded = 0;
    double convergence_rate = 0.0;
    /// alpha, beta, theta, delta, then the effective scale c.
    std::vector<ParamSummary> params;
};

struct SimSummary {
    std::vector<SizeSummary> sizes;
};

/// Column-wise mean, 1/R variance, bias, MSE and type-7 percentile CI of
/// replicate rows. clips[j] (if given) bounds column j's interval.
/// Throws std::invalid_argument below 40 rows.
std::vector<ParamSummary> aggregate(const std::vector<std::vector<double>>& replicates,
                                    const std::vector<double>& truth,
                                    const std::vector<std::string>& names,
                                    const std::vector<std::optional<est::Interval>>& clips = {});

/// Per-replicate seeds: the sample for replicate r at size n uses
/// derive_seed(case.seed, n, 2r) and its fit derive_seed(case.seed, n, 2r + 1).
std::uint64_t sample_seed(const SimCase& c, int n, int replicate);
std::uint64_t fit_seed(const SimCase& c, int n, int replicate);

/// Raw replicate estimates for one sample size (rows: alpha, beta, theta,
/// delta, c) and each row's convergence flag.
struct ReplicateBatch {
    std::vector<std::vector<double>> estimates;
    std::vector<bool> converged;
};
ReplicateBatch run_replicates(const SimCase& c, int n, kernels::Exec exec);

/// Generate, fit and aggregate for every sample size. Replicates run in
/// parallel under Exec::parallel; results are written by replicate index so
/// the summary is identical to the serial run.
SimSummary run_case(const SimCase& c, kernels::Exec exec = kernels::Exec::parallel);

}  // namespace ngfisk::sim
