// Benchmark: the threaded enumeration kernel against its single-threaded
// reference, plus construction throughput at growing output orders.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "selfdual/constructions.hpp"
#include "selfdual/verify.hpp"

using namespace selfdual;
using clock_type = std::chrono::steady_clock;

namespace {

double run_timed(const std::function<void()>& fn) {
    const auto t0 = clock_type::now();
    fn();
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n\n");
#endif

    std::printf("== enumeration: serial reference vs threaded kernel ==\n");
    std::printf("%-22s %10s %10s %8s %7s\n", "sequence", "serial", "threaded", "speedup", "match");
    const std::vector<std::vector<int>> sequences{
        {4, 4, 4, 3, 3, 3, 3},
        {5, 4, 4, 3, 3, 3, 3, 3},
        {4, 4, 4, 4, 3, 3, 3, 3},
        {5, 5, 3, 3, 3, 3, 3, 3},
    };
    for (const auto& seq : sequences) {
        EnumerationQuery q;
        q.sequence = DegreeSequence(seq);
        q.self_dual = true;
        std::vector<std::string> serial_out, parallel_out;
        const double ts = run_timed([&] { serial_out = enumerate_realizations_serial(q); });
        const double tp = run_timed([&] { parallel_out = enumerate_realizations(q); });
        std::printf("%-22s %9.3fs %9.3fs %7.2fx %7s\n", q.sequence.to_string().c_str(), ts, tp,
                    ts / tp, serial_out == parallel_out ? "yes" : "NO");
    }

    std::printf("\n== construction throughput (constant-4 tuples) ==\n");
    std::printf("%10s %12s %12s %14s\n", "order", "seconds", "edits", "edits/second");
    for (int k : {996, 9996, 99996, 999996}) {
        DegreeTuple t(std::vector<int>(static_cast<size_t>(k), 4));
        AlgorithmOneResult run;
        const double dt = run_timed([&] { run = algorithm_one(t); });
        std::printf("%10d %11.4fs %12lld %14.0f\n", run.primal.order(), dt, run.edit_count,
                    static_cast<double>(run.edit_count) / dt);
    }
    return 0;
}
