// Serial reference kernels against their OpenMP counterparts.
//   bench_kernels [tree_order] [graph_order] [workers] [repeats]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "topoidx/kernels.hpp"
#include "topoidx/treegen.hpp"

using namespace topoidx;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool same) {
    std::printf("%-22s serial %9.4f s  omp %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "outputs match" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t tree_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 17;
    const std::size_t graph_n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 6;
    const int workers = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();
    const int repeats = argc > 4 ? std::atoi(argv[4]) : 3;

    std::vector<std::uint8_t> levels;
    TreeStream s = enumerate_trees(tree_n);
    while (s.next()) {
        const auto l = s.levels();
        levels.insert(levels.end(), l.begin(), l.end());
    }
    const std::size_t count = levels.size() / tree_n;
    std::printf("trees of order %zu: %zu, connected graphs of order %zu, %d workers\n", tree_n, count, graph_n,
                workers);

    std::vector<AbcAbs> a(count), b(count);
    const double ts = best_of(repeats, [&] { kernels::tree_abc_abs_serial(levels, tree_n, a); });
    const double tp = best_of(repeats, [&] { kernels::tree_abc_abs_omp(levels, tree_n, b, workers); });
    bool same = true;
    for (std::size_t i = 0; i < count; ++i) same = same && a[i].abc == b[i].abc && a[i].abs == b[i].abs;
    report("tree_abc_abs", ts, tp, same);

    std::vector<CanonicalKey> ks, kp;
    const double cs = best_of(repeats, [&] { ks = kernels::connected_keys_serial(graph_n); });
    const double cp = best_of(repeats, [&] { kp = kernels::connected_keys_omp(graph_n, workers); });
    report("connected_keys", cs, cp, ks == kp);
    return 0;
}
