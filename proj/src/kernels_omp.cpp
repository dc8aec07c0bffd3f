#include <omp.h>

#include <algorithm>
#include <unordered_set>

#include "topoidx/kernels.hpp"
#include "topoidx/treegen.hpp"

namespace topoidx::kernels {

void tree_abc_abs_omp(std::span<const std::uint8_t> levels, std::size_t n, std::span<AbcAbs> out, int workers) {
    const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel num_threads(workers)
    {
        std::vector<DegreePair> pairs;
        std::vector<std::uint32_t> degree;
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < count; ++t) {
            tree_degree_pairs(levels.subspan(static_cast<std::size_t>(t) * n, n), pairs, degree);
            out[static_cast<std::size_t>(t)] = abc_abs_from_degree_pairs(pairs);
        }
    }
}

std::vector<CanonicalKey> connected_keys_omp(std::size_t n, int workers) {
    if (n <= 2) return connected_keys_serial(n);
    const std::size_t bits = n * (n - 1) / 2;
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << bits);
    std::vector<CanonicalKey> keys;
#pragma omp parallel num_threads(workers)
    {
        std::unordered_set<CanonicalKey, CanonicalKeyHash> local;
        std::vector<std::uint16_t> rows(n);
#pragma omp for schedule(dynamic, 4096)
        for (std::int64_t mask = 0; mask < total; ++mask) {
            if (subset_rows(static_cast<std::uint32_t>(mask), n, rows)) local.insert(canonical_key(rows));
        }
#pragma omp critical
        keys.insert(keys.end(), local.begin(), local.end());
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace topoidx::kernels
