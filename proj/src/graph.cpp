#include "topoidx/graph.hpp"

#include <algorithm>
#include <numeric>

namespace topoidx {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
    Graph g;
    g.adj_.resize(n);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw VertexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw DuplicateEdge("duplicate edge (" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + ")");
    }
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.degrees_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.adj_[v].begin(), g.adj_[v].end());
        g.degrees_[v] = static_cast<std::uint32_t>(g.adj_[v].size());
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::string to_string(Shape s) {
    switch (s) {
        case Shape::Path: return "path";
        case Shape::Cycle: return "cycle";
        case Shape::Star: return "star";
        case Shape::Other: return "other";
    }
    return "other";
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<Vertex> pendent_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

std::uint32_t min_degree(const Graph& g) {
    auto d = g.degrees();
    return *std::min_element(d.begin(), d.end());
}

std::uint32_t max_degree(const Graph& g) {
    auto d = g.degrees();
    return *std::max_element(d.begin(), d.end());
}

Graph subdivide_at_degree2(const Graph& g, Vertex x, Edge e) {
    if (x >= g.order()) throw VertexOutOfRange("vertex " + std::to_string(x) + " out of range");
    if (g.degree(x) != 2) {
        throw GraphError("vertex " + std::to_string(x) + " has degree " +
                         std::to_string(g.degree(x)) + ", expected 2");
    }
    Vertex w;
    if (e.first == x) {
        w = e.second;
    } else if (e.second == x) {
        w = e.first;
    } else {
        throw GraphError("edge is not incident to vertex " + std::to_string(x));
    }
    if (w >= g.order() || !g.adjacent(x, w)) throw GraphError("edge is not present in the graph");

    const auto y = static_cast<Vertex>(g.order());
    const Edge removed{std::min(x, w), std::max(x, w)};
    std::vector<Edge> edges;
    edges.reserve(g.size() + 1);
    for (const Edge& f : g.edges())
        if (f != removed) edges.push_back(f);
    edges.emplace_back(x, y);
    edges.emplace_back(w, y);
    return Graph::from_edges(g.order() + 1, edges);
}

Shape classify_shape(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("classify_shape requires a connected graph");
    const std::size_t n = g.order();
    if (n <= 2) return Shape::Path;
    std::size_t ones = 0, twos = 0, full = 0;
    for (auto d : g.degrees()) {
        if (d == 1) ++ones;
        if (d == 2) ++twos;
        if (d == n - 1) ++full;
    }
    if (ones == 2 && twos == n - 2) return Shape::Path;
    if (twos == n) return Shape::Cycle;
    if (full == 1 && ones == n - 1) return Shape::Star;
    return Shape::Other;
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e(a.edges().begin(), a.edges().end());
    const auto shift = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
    return Graph::from_edges(a.order() + b.order(), e);
}

}  // namespace topoidx
