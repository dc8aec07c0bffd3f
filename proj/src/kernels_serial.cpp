#include <algorithm>

#include "topoidx/kernels.hpp"
#include "topoidx/treegen.hpp"

namespace topoidx::kernels {

bool subset_rows(std::uint32_t mask, std::size_t n, std::span<std::uint16_t> rows) {
    std::fill(rows.begin(), rows.end(), 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            if ((mask >> k) & 1u) {
                rows[i] |= static_cast<std::uint16_t>(1u << j);
                rows[j] |= static_cast<std::uint16_t>(1u << i);
            }
        }
    }
    const std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
    std::uint16_t reach = 1, prev = 0;
    while (reach != prev) {
        prev = reach;
        for (std::uint16_t m = prev; m; m &= m - 1) reach |= rows[__builtin_ctz(m)];
    }
    return reach == all;
}

void tree_abc_abs_serial(std::span<const std::uint8_t> levels, std::size_t n, std::span<AbcAbs> out) {
    std::vector<DegreePair> pairs;
    std::vector<std::uint32_t> degree;
    for (std::size_t t = 0; t < out.size(); ++t) {
        tree_degree_pairs(levels.subspan(t * n, n), pairs, degree);
        out[t] = abc_abs_from_degree_pairs(pairs);
    }
}

std::vector<CanonicalKey> connected_keys_serial(std::size_t n) {
    std::vector<CanonicalKey> keys;
    if (n == 1) {
        keys.push_back(canonical_key(std::vector<std::uint16_t>{0}));
        return keys;
    }
    const std::size_t bits = n * (n - 1) / 2;
    std::vector<std::uint16_t> rows(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        if (subset_rows(static_cast<std::uint32_t>(mask), n, rows)) keys.push_back(canonical_key(rows));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace topoidx::kernels
