#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "topoidx/graph.hpp"

namespace topoidx {

// The encoding keeps the whole upper triangle in one 64-bit word.
inline constexpr std::size_t kCanonicalHardLimit = 11;
inline constexpr std::size_t kDefaultCanonicalBound = 10;

// Isomorphism-class identifier: the order plus the minimal column-major
// upper-triangle code over all vertex orderings that respect the stable
// degree-refinement partition.
struct CanonicalKey {
    std::uint8_t order = 0;
    std::uint64_t code = 0;

    // Order byte followed by the code, big-endian.
    std::string bytes() const;

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.code * 0x9E3779B97F4A7C15ull ^ k.order);
    }
};

// Throws GraphError when the order exceeds `bound` (or the hard limit).
CanonicalKey canonical_key(const Graph& g, std::size_t bound = kDefaultCanonicalBound);

// Fast path for enumerators: rows[v] is the neighbor bitmask of v.
CanonicalKey canonical_key(std::span<const std::uint16_t> rows);

// The canonically labeled representative of a key.
Graph graph_from_key(const CanonicalKey& key);

}  // namespace topoidx
