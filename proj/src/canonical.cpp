#include "topoidx/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace topoidx {

namespace {

constexpr std::size_t N = kCanonicalHardLimit;

using Rows = std::array<std::uint16_t, N>;
using Colors = std::array<std::uint8_t, N>;

// Colour refinement starting from degrees. Colours are assigned by sorted
// signature, so the resulting ordered partition is an isomorphism invariant.
Colors refine(const Rows& rows, std::size_t n) {
    Colors color{};
    using Signature = std::array<std::uint8_t, N + 1>;
    std::array<Signature, N> sig{};
    std::array<std::uint8_t, N> idx{};
    std::iota(idx.begin(), idx.begin() + n, 0);

    for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<std::uint8_t>(__builtin_popcount(rows[v]));
    std::size_t classes = 0;
    for (;;) {
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].fill(0);
            sig[v][0] = color[v];
            for (std::uint16_t m = rows[v]; m; m &= m - 1) ++sig[v][1 + color[__builtin_ctz(m)]];
        }
        std::sort(idx.begin(), idx.begin() + n, [&](auto a, auto b) { return sig[a] < sig[b]; });
        Colors next{};
        std::uint8_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++c;
            next[idx[i]] = c;
        }
        const std::size_t now = static_cast<std::size_t>(c) + 1;
        color = next;
        if (now == classes || now == n) break;
        classes = now;
    }
    return color;
}

struct Search {
    const Rows& rows;
    std::size_t n;
    std::size_t total_bits;
    std::array<std::uint8_t, N> slot_color{};
    Colors color{};
    std::array<std::uint8_t, N> placed{};
    std::uint16_t used = 0;
    std::uint64_t best = ~std::uint64_t{0};
    bool have_best = false;

    void run(std::size_t p, std::uint64_t code) {
        if (p == n) {
            if (!have_best || code < best) {
                best = code;
                have_best = true;
            }
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if ((used >> v) & 1u || color[v] != slot_color[p]) continue;
            std::uint64_t next = code;
            for (std::size_t i = 0; i < p; ++i) next = (next << 1) | ((rows[placed[i]] >> v) & 1u);
            if (have_best) {
                const std::size_t len = p * (p + 1) / 2;
                const std::uint64_t prefix = len == 0 ? 0 : best >> (total_bits - len);
                if (next > prefix) continue;
                // A strictly smaller prefix beats the current best outright.
                if (next < prefix) have_best = false;
            }
            placed[p] = static_cast<std::uint8_t>(v);
            used |= static_cast<std::uint16_t>(1u << v);
            run(p + 1, next);
            used &= static_cast<std::uint16_t>(~(1u << v));
        }
    }
};

CanonicalKey key_of_rows(const Rows& rows, std::size_t n) {
    CanonicalKey key;
    key.order = static_cast<std::uint8_t>(n);
    if (n <= 1) return key;
    Search s{rows, n, n * (n - 1) / 2};
    s.color = refine(rows, n);
    std::copy(s.color.begin(), s.color.begin() + n, s.slot_color.begin());
    std::sort(s.slot_color.begin(), s.slot_color.begin() + n);
    s.run(0, 0);
    key.code = s.best;
    return key;
}

}  // namespace

std::string CanonicalKey::bytes() const {
    std::string out(1, static_cast<char>(order));
    for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<char>((code >> shift) & 0xFF));
    return out;
}

CanonicalKey canonical_key(const Graph& g, std::size_t bound) {
    const std::size_t n = g.order();
    if (n > std::min(bound, kCanonicalHardLimit)) {
        throw GraphError("canonical_key supports order <= " + std::to_string(std::min(bound, kCanonicalHardLimit)) +
                         ", got " + std::to_string(n));
    }
    Rows rows{};
    for (auto [u, v] : g.edges()) {
        rows[u] |= static_cast<std::uint16_t>(1u << v);
        rows[v] |= static_cast<std::uint16_t>(1u << u);
    }
    return key_of_rows(rows, n);
}

CanonicalKey canonical_key(std::span<const std::uint16_t> rows) {
    if (rows.empty() || rows.size() > kCanonicalHardLimit) throw GraphError("canonical_key: unsupported order");
    Rows r{};
    std::copy(rows.begin(), rows.end(), r.begin());
    return key_of_rows(r, rows.size());
}

Graph graph_from_key(const CanonicalKey& key) {
    const std::size_t n = key.order;
    const std::size_t total = n * (n - 1) / 2;
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if ((key.code >> (total - 1 - k)) & 1u) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

}  // namespace topoidx
