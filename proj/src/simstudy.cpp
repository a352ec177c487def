#include "ngfisk/simstudy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ngfisk/random.hpp"
#include "ngfisk/stats.hpp"

namespace ngfisk::sim {

void SimCase::validate() const {
    if (replications < 40) {
        throw std::invalid_argument("SimCase: replications must be >= 40");
    }
    if (sample_sizes.empty()) {
        throw std::invalid_argument("SimCase: no sample sizes");
    }
    for (std::size_t i = 0; i < sample_sizes.size(); ++i) {
        if (sample_sizes[i] < 2) {
            throw std::invalid_argument("SimCase: sample sizes must be >= 2");
        }
        if (i > 0 && sample_sizes[i] <= sample_sizes[i - 1]) {
            throw std::invalid_argument("SimCase: sample sizes must be strictly ascending");
        }
    }
    if (box.size() != 4) {
        throw std::invalid_argument("SimCase: box must have 4 parameters");
    }
    if (starts < 1) {
        throw std::invalid_argument("SimCase: starts must be >= 1");
    }
}

SimCase reference_case(int which, int replications, std::uint64_t seed) {
    const std::vector<int> sizes{25, 50, 100, 150, 250, 500};
    switch (which) {
        case 1: return {NgFiskParams(1.5, 2.0, 2.5, 0.25), sizes, replications, seed};
        case 2: return {NgFiskParams(1.0, 3.0, 2.5, 0.5), sizes, replications, seed};
        case 3: return {NgFiskParams(1.5, 3.5, 2.0, 0.75), sizes, replications, seed};
        default: throw std::invalid_argument("reference_case: case must be 1, 2 or 3");
    }
}

namespace {

// Column summaries without the replicate-count precondition. run_case uses it
// directly because non-converged exclusions can leave fewer than 40 rows.
std::vector<ParamSummary> summarize(const std::vector<std::vector<double>>& replicates,
                                    const std::vector<double>& truth,
                                    const std::vector<std::string>& names,
                                    const std::vector<std::optional<est::Interval>>& clips) {
    const std::size_t cols = truth.size();
    if (names.size() != cols || (!clips.empty() && clips.size() != cols)) {
        throw std::invalid_argument("aggregate: truth, names and clips must agree in size");
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ParamSummary> out;
    std::vector<double> column(replicates.size());
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t r = 0; r < replicates.size(); ++r) {
            column[r] = replicates[r].at(j);
        }
        ParamSummary s;
        s.name = names[j];
        s.truth = truth[j];
        if (column.empty()) {
            s.mle_mean = s.variance = s.bias = s.mse = nan;
            s.ci95 = {nan, nan};
            out.push_back(std::move(s));
            continue;
        }
        const auto m = stats::mean_variance(column);
        s.mle_mean = m.mean;
        s.variance = m.variance;
        s.bias = m.mean - truth[j];
        s.mse = s.variance + s.bias * s.bias;
        std::vector<double> sorted = column;
        std::sort(sorted.begin(), sorted.end());
        double lo = stats::quantile_type7(sorted, 0.025);
        double hi = stats::quantile_type7(sorted, 0.975);
        if (!clips.empty() && clips[j]) {
            lo = std::clamp(lo, clips[j]->lower, clips[j]->upper);
            hi = std::clamp(hi, clips[j]->lower, clips[j]->upper);
        }
        s.ci95 = {lo, hi};
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<ParamSummary> aggregate(const std::vector<std::vector<double>>& replicates,
                                    const std::vector<double>& truth,
                                    const std::vector<std::string>& names,
                                    const std::vector<std::optional<est::Interval>>& clips) {
    if (replicates.size() < 40) {
        throw std::invalid_argument("aggregate: need at least 40 replicates, got " +
                                    std::to_string(replicates.size()));
    }
    return summarize(replicates, truth, names, clips);
}

std::uint64_t sample_seed(const SimCase& c, int n, int replicate) {
    return derive_seed(c.seed, static_cast<std::uint64_t>(n), 2ULL * static_cast<std::uint64_t>(replicate));
}

std::uint64_t fit_seed(const SimCase& c, int n, int replicate) {
    return derive_seed(c.seed, static_cast<std::uint64_t>(n),
                       2ULL * static_cast<std::uint64_t>(replicate) + 1ULL);
}

ReplicateBatch run_replicates(const SimCase& c, int n, kernels::Exec exec) {
    const int reps = c.replications;
    ReplicateBatch batch;
    batch.estimates.assign(static_cast<std::size_t>(reps), std::vector<double>(5, 0.0));
    batch.converged.assign(static_cast<std::size_t>(reps), false);
    std::vector<char> ok(static_cast<std::size_t>(reps), 0);
    std::vector<char> failed(static_cast<std::size_t>(reps), 0);

#pragma omp parallel for schedule(dynamic, 1) if (exec == kernels::Exec::parallel)
    for (int r = 0; r < reps; ++r) {
        const auto idx = static_cast<std::size_t>(r);
        try {
            const auto data = sample(c.truth, static_cast<std::size_t>(n), sample_seed(c, n, r));
            est::FitOptions options;
            options.starts = c.starts;
            options.seed = fit_seed(c, n, r);
            options.std_errors = false;
            const auto fit = est::fit_ngfisk(data, c.box, options);
            auto& row = batch.estimates[idx];
            std::copy(fit.estimates.begin(), fit.estimates.end(), row.begin());
            row[4] = fit.effective_scale.value_or(0.0);
            ok[idx] = fit.converged ? 1 : 0;
        } catch (const std::exception&) {
            failed[idx] = 1;
        }
    }
    for (std::size_t i = 0; i < ok.size(); ++i) {
        batch.converged[i] = ok[i] != 0 && failed[i] == 0;
    }
    return batch;
}

SimSummary run_case(const SimCase& c, kernels::Exec exec) {
    c.validate();
    const auto truth_burr = effective_burr(c.truth);
    const std::vector<double> truth{c.truth.alpha(), c.truth.beta(), c.truth.theta(),
                                    c.truth.delta(), truth_burr.c};
    const std::vector<std::string> names{"alpha", "beta", "theta", "delta", "c"};
    std::vector<std::optional<est::Interval>> clips;
    for (std::size_t j = 0; j < 4; ++j) {
        clips.emplace_back(c.box.bounds(j));
    }
    clips.emplace_back(std::nullopt);

    SimSummary summary;
    for (int n : c.sample_sizes) {
        const ReplicateBatch batch = run_replicates(c, n, exec);
        std::vector<std::vector<double>> kept;
        for (std::size_t r = 0; r < batch.estimates.size(); ++r) {
            if (batch.converged[r]) {
                kept.push_back(batch.estimates[r]);
            }
        }
        SizeSummary size;
        size.n = n;
        size.replications = c.replications;
        size.converged = static_cast<int>(kept.size());
        size.excluded = c.replications - size.converged;
        size.convergence_rate = static_cast<double>(size.converged) / c.replications;
        size.params = summarize(kept, truth, names, clips);
        summary.sizes.push_back(std::move(size));
    }
    return summary;
}

}  // namespace ngfisk::sim
