#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topoidx/graph.hpp"
#include "topoidx/indices.hpp"

namespace topoidx {

// Depth-first level sequence of a rooted tree: the root has level 1 and every
// later entry lies in [2, previous + 1]. Vertex i of the tree is position i.
class LevelSequence {
public:
    // Throws std::invalid_argument if the sequence is malformed.
    explicit LevelSequence(std::vector<std::uint8_t> levels);

    std::span<const std::uint8_t> levels() const { return levels_; }
    std::size_t order() const { return levels_.size(); }

    Graph to_graph() const;

    friend bool operator==(const LevelSequence&, const LevelSequence&) = default;

private:
    std::vector<std::uint8_t> levels_;
};

bool is_valid_level_sequence(std::span<const std::uint8_t> levels);

// parent[i] for i >= 1; parent[0] is 0.
void level_parents(std::span<const std::uint8_t> levels, std::span<Vertex> parent);

Graph tree_from_levels(std::span<const std::uint8_t> levels);

// Degree pairs of the tree edges, straight from the sequence. `pairs` is
// resized to n - 1; `degree` is scratch space resized to n.
void tree_degree_pairs(std::span<const std::uint8_t> levels, std::vector<DegreePair>& pairs,
                       std::vector<std::uint32_t>& degree);

// Generates every free tree of order n exactly once as a center-rooted
// canonical level sequence (Wright-Richmond-Odlyzko-McKay), in decreasing
// lexicographic order of the sequences.
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(std::size_t n);

    // Advances to the next tree; false when exhausted.
    bool next();

    std::span<const std::uint8_t> levels() const { return levels_; }
    std::size_t order() const { return n_; }

private:
    bool next_rooted(std::size_t p);
    void make_free_canonical();

    std::size_t n_;
    std::vector<std::uint8_t> levels_;
    bool started_ = false;
    bool done_ = false;
};

// A pull-based stream over the trees of one order. With parts > 1 it yields
// only the trees whose position in the full generation order is congruent to
// `part` modulo `parts`.
class TreeStream {
public:
    TreeStream(std::size_t n, std::size_t part = 0, std::size_t parts = 1);

    bool next();
    std::span<const std::uint8_t> levels() const { return gen_.levels(); }
    LevelSequence sequence() const { return LevelSequence({levels().begin(), levels().end()}); }
    Graph graph() const { return tree_from_levels(levels()); }

private:
    FreeTreeGenerator gen_;
    std::size_t part_;
    std::size_t parts_;
    std::size_t position_ = 0;
};

TreeStream enumerate_trees(std::size_t n);

std::uint64_t count_trees(std::size_t n);

// Throws std::invalid_argument for parts == 0.
std::vector<TreeStream> partitioned_enumeration(std::size_t n, std::size_t parts);

}  // namespace topoidx
