#include "topoidx/treegen.hpp"

#include <algorithm>
#include <stdexcept>

namespace topoidx {

bool is_valid_level_sequence(std::span<const std::uint8_t> levels) {
    if (levels.empty() || levels[0] != 1) return false;
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i] < 2 || levels[i] > levels[i - 1] + 1) return false;
    return true;
}

LevelSequence::LevelSequence(std::vector<std::uint8_t> levels) : levels_(std::move(levels)) {
    if (!is_valid_level_sequence(levels_)) throw std::invalid_argument("malformed level sequence");
}

Graph LevelSequence::to_graph() const { return tree_from_levels(levels_); }

void level_parents(std::span<const std::uint8_t> levels, std::span<Vertex> parent) {
    // last[d] = most recent vertex seen at level d
    std::vector<Vertex> last(levels.size() + 2, 0);
    parent[0] = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0) parent[i] = last[levels[i] - 1];
        last[levels[i]] = static_cast<Vertex>(i);
    }
}

Graph tree_from_levels(std::span<const std::uint8_t> levels) {
    std::vector<Vertex> parent(levels.size());
    level_parents(levels, parent);
    std::vector<Edge> edges;
    edges.reserve(levels.size());
    for (std::size_t i = 1; i < levels.size(); ++i) edges.emplace_back(parent[i], static_cast<Vertex>(i));
    return Graph::from_edges(levels.size(), edges);
}

void tree_degree_pairs(std::span<const std::uint8_t> levels, std::vector<DegreePair>& pairs,
                       std::vector<std::uint32_t>& degree) {
    const std::size_t n = levels.size();
    degree.assign(n, 0);
    pairs.resize(n - 1);
    // Parents are recovered on the fly; pairs temporarily hold vertex ids.
    Vertex last[256];
    last[1] = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const Vertex p = last[levels[i] - 1];
        last[levels[i]] = static_cast<Vertex>(i);
        ++degree[p];
        ++degree[i];
        pairs[i - 1] = {p, static_cast<Vertex>(i)};
    }
    for (auto& [u, v] : pairs) {
        const auto a = degree[u], b = degree[v];
        u = std::min(a, b);
        v = std::max(a, b);
    }
}

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("tree order must be at least 1");
    if (n > 254) throw std::invalid_argument("tree order too large");
}

// Beyer-Hedetniemi successor of a rooted level sequence, overwriting from p.
bool FreeTreeGenerator::next_rooted(std::size_t p) {
    auto& L = levels_;
    if (p == 0) return false;
    std::size_t q = p - 1;
    while (L[q] != L[p] - 1) --q;
    for (std::size_t i = p; i < n_; ++i) L[i] = L[i - p + q];
    return true;
}

// If the current rooted tree is not the canonical center-rooted form of a
// free tree, jump to the next sequence that is.
void FreeTreeGenerator::make_free_canonical() {
    auto& L = levels_;
    // m = start of the second subtree of the root
    std::size_t m = 2;
    while (m < n_ && L[m] != 2) ++m;

    const int left_height = *std::max_element(L.begin() + 1, L.begin() + m) - 2;
    const int rest_height = m < n_ ? *std::max_element(L.begin() + m, L.end()) - 1 : 0;
    const std::size_t left_size = m - 1;
    const std::size_t rest_size = n_ - m + 1;

    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left_size > rest_size) {
            valid = false;
        } else if (left_size == rest_size) {
            // left = L[1..m) - 2, rest = 0 followed by L[m..] - 1
            for (std::size_t i = 0; i < left_size; ++i) {
                const int a = L[1 + i] - 2;
                const int b = i == 0 ? 0 : L[m + i - 1] - 1;
                if (a != b) {
                    valid = a < b;
                    break;
                }
            }
        }
    }
    if (valid) return;

    const std::size_t p = left_size;
    const bool deep = L[p] > 3;
    next_rooted(p);
    if (deep) {
        std::size_t m2 = 2;
        while (m2 < n_ && L[m2] != 2) ++m2;
        const std::size_t top = *std::max_element(L.begin() + 1, L.begin() + m2);
        // overwrite the tail with a path of levels 2..top
        const std::size_t len = top - 1;
        for (std::size_t i = 0; i < len; ++i) L[n_ - len + i] = static_cast<std::uint8_t>(2 + i);
    }
}

bool FreeTreeGenerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        levels_.clear();
        // path rooted at its center
        for (std::size_t i = 0; i <= n_ / 2; ++i) levels_.push_back(static_cast<std::uint8_t>(i + 1));
        for (std::size_t i = 2; i <= (n_ + 1) / 2; ++i) levels_.push_back(static_cast<std::uint8_t>(i));
        levels_.resize(n_);
        if (n_ > 2) make_free_canonical();
        return true;
    }
    if (n_ <= 2) {
        done_ = true;
        return false;
    }
    std::size_t p = n_ - 1;
    while (levels_[p] == 2) --p;
    if (!next_rooted(p)) {
        done_ = true;
        return false;
    }
    make_free_canonical();
    return true;
}

TreeStream::TreeStream(std::size_t n, std::size_t part, std::size_t parts)
    : gen_(n), part_(part), parts_(parts) {
    if (parts == 0) throw std::invalid_argument("partition count must be at least 1");
    if (part >= parts) throw std::invalid_argument("partition index out of range");
}

bool TreeStream::next() {
    while (gen_.next()) {
        const std::size_t pos = position_++;
        if (pos % parts_ == part_) return true;
    }
    return false;
}

TreeStream enumerate_trees(std::size_t n) { return TreeStream(n); }

std::uint64_t count_trees(std::size_t n) {
    FreeTreeGenerator gen(n);
    std::uint64_t count = 0;
    while (gen.next()) ++count;
    return count;
}

std::vector<TreeStream> partitioned_enumeration(std::size_t n, std::size_t parts) {
    if (parts == 0) throw std::invalid_argument("partition count must be at least 1");
    std::vector<TreeStream> out;
    out.reserve(parts);
    for (std::size_t p = 0; p < parts; ++p) out.emplace_back(n, p, parts);
    return out;
}

}  // namespace topoidx
