#include "ngfisk/kernels.hpp"

#include <random>
#include <stdexcept>

#include "ngfisk/random.hpp"

namespace ngfisk::kernels {

void quantile_batch(const NgFiskParams& p, std::span<const double> probs, std::span<double> out,
                    Exec exec) {
    if (probs.size() != out.size()) {
        throw std::invalid_argument("quantile_batch: size mismatch");
    }
    const auto n = static_cast<std::ptrdiff_t>(probs.size());
    const bool go_parallel = exec == Exec::parallel && probs.size() >= kParallelThreshold;
    // quantile() throws only on out-of-range probabilities; check up front so
    // no exception escapes the parallel region
    for (double u : probs) {
        if (!(u > 0.0 && u < 1.0)) {
            throw std::domain_error("quantile_batch: probability outside (0, 1)");
        }
    }
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = quantile(p, probs[static_cast<std::size_t>(i)]);
    }
}

std::vector<double> sample_batch(const NgFiskParams& p, std::size_t n, std::uint64_t seed,
                                 Exec exec) {
    std::mt19937_64 engine(seed);
    std::vector<double> u(n);
    for (auto& v : u) {
        v = open_uniform(engine);
    }
    std::vector<double> out(n);
    quantile_batch(p, u, out, exec);
    return out;
}

std::vector<CurveRow> curves(const NgFiskParams& p, std::span<const double> xs, Exec exec) {
    for (double x : xs) {
        if (!(x >= 0.0)) {
            throw std::domain_error("curves: grid values must be >= 0");
        }
    }
    std::vector<CurveRow> rows(xs.size());
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
    const bool go_parallel = exec == Exec::parallel && xs.size() >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double x = xs[static_cast<std::size_t>(i)];
        rows[static_cast<std::size_t>(i)] = {x, pdf(p, x), cdf(p, x), sf(p, x), hazard(p, x)};
    }
    return rows;
}

double sum_log_pdf(const NgFiskParams& p, std::span<const double> data, Exec exec) {
    for (double x : data) {
        if (!(x >= 0.0)) {
            throw std::domain_error("sum_log_pdf: data must be >= 0");
        }
    }
    return block_sum<double>(data.size(), [&](std::size_t i) { return log_pdf(p, data[i]); }, exec);
}

}  // namespace ngfisk::kernels
