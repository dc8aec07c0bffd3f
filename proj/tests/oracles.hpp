#pragma once

// Test-only reference routines. None of these call into the code paths they
// are used to check (no canonical_key, no level-sequence generator).

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "topoidx/graph.hpp"

namespace oracle {

using topoidx::Edge;
using topoidx::Graph;
using topoidx::Vertex;

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<char>> a(g.order(), std::vector<char>(g.order(), 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

// Tries every bijection. Fine up to order 8.
inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<std::uint32_t> dg(g.degrees().begin(), g.degrees().end());
    std::vector<std::uint32_t> dh(h.degrees().begin(), h.degrees().end());
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    const auto a = adjacency_matrix(g), b = adjacency_matrix(h);
    std::vector<std::size_t> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i)
            for (std::size_t j = i + 1; j < p.size() && ok; ++j) ok = a[i][j] == b[p[i]][p[j]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool connected_bfs(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::size_t> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (auto [u, v] : edges) comp[find(u)] = find(v);
    for (std::size_t v = 1; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

// All connected labeled graphs on n vertices, by edge subset.
inline std::vector<Graph> all_connected_labeled(std::size_t n) {
    std::vector<Edge> pairs;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1u) e.push_back(pairs[k]);
        if (connected_bfs(n, e)) out.push_back(Graph::from_edges(n, e));
    }
    return out;
}

// Isomorphism classes by pairwise brute force.
inline std::vector<Graph> dedup_bruteforce(const std::vector<Graph>& graphs) {
    std::vector<Graph> reps;
    for (const auto& g : graphs) {
        bool seen = false;
        for (const auto& r : reps)
            if (isomorphic(g, r)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(g);
    }
    return reps;
}

// AHU encoding of a tree rooted at r.
inline std::string ahu(const Graph& t, Vertex r, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(r))
        if (w != parent) kids.push_back(ahu(t, w, r));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

// Free-tree canonical string: AHU at the center (minimum over a bicenter).
inline std::string tree_canonical(const Graph& t) {
    const std::size_t n = t.order();
    if (n == 1) return "()";
    std::vector<std::uint32_t> deg(t.degrees().begin(), t.degrees().end());
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = next;
    }
    std::string best;
    for (Vertex c : layer) {
        std::string s = ahu(t, c, c);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

// Generate-and-dedup: attach a leaf to every vertex of every tree of order
// n - 1, keep one tree per AHU class.
inline std::vector<Graph> trees_by_extension(std::size_t n) {
    std::vector<Graph> level{Graph::from_edges(1, {})};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto& t : level) {
            for (Vertex v = 0; v < t.order(); ++v) {
                std::vector<Edge> e(t.edges().begin(), t.edges().end());
                e.emplace_back(v, static_cast<Vertex>(t.order()));
                Graph g = Graph::from_edges(k, e);
                if (seen.insert(tree_canonical(g)).second) next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    return level;
}

// Every labeled tree on n >= 2 vertices from its Pruefer sequence.
inline std::vector<Graph> prufer_trees(std::size_t n) {
    std::vector<Graph> out;
    if (n == 2) return {Graph::from_edges(2, {{0, 1}})};
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
        std::vector<std::uint32_t> degree(n, 1);
        for (Vertex x : seq) ++degree[x];
        std::vector<Edge> edges;
        for (Vertex x : seq) {
            Vertex leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --degree[leaf];
            --degree[x];
        }
        Vertex u = n, w = n;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == 1) (u == n ? u : w) = v;
        edges.emplace_back(u, w);
        out.push_back(Graph::from_edges(n, edges));

        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), e);
}

}  // namespace oracle
