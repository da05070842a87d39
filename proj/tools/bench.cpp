// Benchmark: OpenMP kernels against their serial reference implementations,
// plus engine throughput per protocol.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "slicekit/engine.hpp"
#include "slicekit/metrics.hpp"
#include "slicekit/montecarlo.hpp"
#include "slicekit/rng.hpp"

using namespace slicekit;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_ms(F&& f, int reps) {
    // One warmup, then best-of-reps.
    f();
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s %10.2f ms %10.2f ms %7.2fx   %s\n", kernel, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        Rng rng(1);
        const SliceSpec spec = SliceSpec::equal(100);
        std::vector<MetricsRow> rows;
        for (std::size_t i = 0; i < 1000000; ++i) {
            const double rvalue = rng.uniform01();
            rows.push_back(MetricsRow{static_cast<NodeId>(i + 1), rng.uniform01(), rvalue,
                                      spec.slice_of(rvalue)});
        }
        double s = 0.0, p = 0.0;
        const double t_serial = time_ms([&] { s = gdm_serial(rows); }, 3);
        const double t_parallel = time_ms([&] { p = gdm(rows); }, 3);
        report("gdm (n=1e6)", t_serial, t_parallel, s == p);

        const double t_sdm_serial = time_ms([&] { s = sdm_serial(rows, spec); }, 3);
        const double t_sdm_parallel = time_ms([&] { p = sdm(rows, spec); }, 3);
        report("sdm (n=1e6)", t_sdm_serial, t_sdm_parallel, s == p);
    }

    {
        TailResult s{}, p{};
        const double t_serial =
            time_ms([&] { s = binomial_tail_rate_serial(10000, 0.01, 0.5, 2000000, 7); }, 2);
        const double t_parallel =
            time_ms([&] { p = binomial_tail_rate(10000, 0.01, 0.5, 2000000, 7); }, 2);
        report("binomial tail (2e6 trials)", t_serial, t_parallel,
               s.violations == p.violations);
    }

    {
        const SliceSpec spec = SliceSpec::equal(100);
        std::vector<std::uint64_t> s, p;
        const double t_serial =
            time_ms([&] { s = slice_estimate_histogram_serial(spec, 0.105, 14441, 200000, 8); }, 2);
        const double t_parallel =
            time_ms([&] { p = slice_estimate_histogram(spec, 0.105, 14441, 200000, 8); }, 2);
        report("slice histogram (2e5)", t_serial, t_parallel, s == p);
    }

    std::printf("\nengine throughput (n=2000, c=20, 100 slices, 30 cycles):\n");
    for (Protocol protocol :
         {Protocol::Jk, Protocol::ModJk, Protocol::Ranking, Protocol::RankingWindow}) {
        SimConfig cfg;
        cfg.n = 2000;
        cfg.c = 20;
        cfg.slices = SliceSpec::equal(100);
        cfg.protocol = protocol;
        cfg.cycles = 30;
        cfg.seed = 99;
        const double t = time_ms([&] { (void)run(cfg); }, 1);
        std::printf("  %-16s %8.1f ms  (%.0f cycles/s)\n", protocol_name(protocol), t,
                    30.0 * 1000.0 / t);
    }
    return 0;
}
