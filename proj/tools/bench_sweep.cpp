// Compares the serial reference sweep against the OpenMP sweep on the
// builtin n-vertex universe and confirms the reports are identical.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "domgame/generate.hpp"
#include "domgame/sweep.hpp"

using namespace domgame;
using Clock = std::chrono::steady_clock;

namespace {

double run_secs(SweepReport (*fn)(const SweepConfig&, const std::vector<Graph>&),
                const SweepConfig& cfg, const std::vector<Graph>& inputs, std::string* out) {
    auto t0 = Clock::now();
    SweepReport report = fn(cfg, inputs);
    auto t1 = Clock::now();
    *out = report.to_json();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 7;
    int jobs = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
    if (n < 1 || n > 9) {
        std::fprintf(stderr, "usage: bench_sweep [n<=9] [jobs]\n");
        return 2;
    }

    std::printf("generating all graphs on %d vertices...\n", n);
    auto t0 = Clock::now();
    std::vector<Graph> inputs = generate_all_graphs_extended(n);
    double gen = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("  %zu graphs in %.2fs\n", inputs.size(), gen);

    SweepConfig cfg;
    cfg.checks = {SweepCheck::Conjecture12, SweepCheck::Conjecture11, SweepCheck::Obs41,
                  SweepCheck::Thm44, SweepCheck::Thm48, SweepCheck::Equality};

    std::string serial_json, parallel_json;
    double serial = run_secs(run_sweep_serial, cfg, inputs, &serial_json);
    std::printf("serial reference: %.2fs\n", serial);

    cfg.jobs = jobs;
    double parallel = run_secs(run_sweep, cfg, inputs, &parallel_json);
    std::printf("openmp x%d:       %.2fs  (speedup %.2fx)\n", jobs, parallel, serial / parallel);

    if (serial_json != parallel_json) {
        std::fprintf(stderr, "FAIL: parallel report differs from the serial reference\n");
        return 1;
    }
    std::printf("reports identical: yes\n");
    return 0;
}
