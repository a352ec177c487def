// Serial vs OpenMP timings for the hot kernels.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <vector>

#include <omp.h>

#include "ngfisk/kernels.hpp"
#include "ngfisk/simstudy.hpp"

namespace {

double seconds(const std::function<void()>& fn, int repeats) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) {
        fn();
    }
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / repeats;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %10.4f ms   parallel %10.4f ms   speedup %5.2fx\n", name,
                serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
    using ngfisk::kernels::Exec;
    std::printf("threads: %d\n", omp_get_max_threads());

    const ngfisk::NgFiskParams p(1.5, 2.0, 2.5, 0.25);
    const std::size_t n = 1 << 20;
    std::vector<double> probs(n);
    for (std::size_t i = 0; i < n; ++i) {
        probs[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    }
    std::vector<double> out(n);
    report("quantile_batch (1M)",
           seconds([&] { ngfisk::kernels::quantile_batch(p, probs, out, Exec::serial); }, 5),
           seconds([&] { ngfisk::kernels::quantile_batch(p, probs, out, Exec::parallel); }, 5));

    const auto data = ngfisk::kernels::sample_batch(p, n, 7, Exec::parallel);
    volatile double sink = 0.0;
    report("sum_log_pdf (1M)",
           seconds([&] { sink = ngfisk::kernels::sum_log_pdf(p, data, Exec::serial); }, 5),
           seconds([&] { sink = ngfisk::kernels::sum_log_pdf(p, data, Exec::parallel); }, 5));

    auto sim_case = ngfisk::sim::reference_case(1, 40, 11);
    sim_case.sample_sizes = {50};
    report("run_case (40 reps, n=50)",
           seconds([&] { ngfisk::sim::run_case(sim_case, Exec::serial); }, 1),
           seconds([&] { ngfisk::sim::run_case(sim_case, Exec::parallel); }, 1));
    (void)sink;
    return 0;
}
