#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ngfisk/distribution.hpp"

// Data-parallel kernels. Every kernel has a serial path that is the
// reference for tests and an OpenMP path that must agree with it bit for bit.
namespace ngfisk::kernels {

enum class Exec { serial, parallel };

/// Fixed block length for reductions. Partial sums are formed per block and
/// added in block order, so the result does not depend on the thread count.
inline constexpr std::size_t kBlock = 1024;

/// Below this size parallel requests run serially.
inline constexpr std::size_t kParallelThreshold = 4 * kBlock;

/// Sum of term(i) for i in [0, n) under the blocked reduction order.
/// T needs value-initialization and +=.
template <class T, class Term>
T block_sum(std::size_t n, Term&& term, Exec exec) {
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<T> partial(blocks, T{});
    const bool go_parallel = exec == Exec::parallel && n >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) {
            acc += term(i);
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    T total{};
    for (const auto& v : partial) {
        total += v;
    }
    return total;
}

/// out[i] = quantile(p, probs[i]). Sizes must match.
void quantile_batch(const NgFiskParams& p, std::span<const double> probs, std::span<double> out,
                    Exec exec);

/// Inverse-transform sampling: uniforms are drawn serially from the seed,
/// then mapped through quantile_batch. Output equals ngfisk::sample.
std::vector<double> sample_batch(const NgFiskParams& p, std::size_t n, std::uint64_t seed,
                                 Exec exec);

struct CurveRow {
    double x;
    double pdf;
    double cdf;
    double survival;
    double hazard;
};

std::vector<CurveRow> curves(const NgFiskParams& p, std::span<const double> xs, Exec exec);

/// Sum of log pdf over data.
double sum_log_pdf(const NgFiskParams& p, std::span<const double> data, Exec exec);

}  // namespace ngfisk::kernels
