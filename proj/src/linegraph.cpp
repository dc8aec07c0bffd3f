#include "topoidx/linegraph.hpp"

#include <algorithm>
#include <map>

namespace topoidx {

Graph line_graph(const Graph& k) {
    if (k.size() == 0) throw GraphError("line graph of an edgeless graph is empty");
    if (!is_connected(k)) throw NotConnected("line_graph requires a connected graph");
    const auto edges = k.edges();
    std::vector<std::vector<Vertex>> incident(k.order());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].first].push_back(static_cast<Vertex>(i));
        incident[edges[i].second].push_back(static_cast<Vertex>(i));
    }
    std::vector<Edge> out;
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) out.emplace_back(inc[a], inc[b]);
    return Graph::from_edges(edges.size(), out);
}

bool is_odd_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
    for (Vertex w = 0; w < g.order(); ++w) {
        const int hits = g.adjacent(w, a) + g.adjacent(w, b) + g.adjacent(w, c);
        if (hits % 2 == 1) return true;
    }
    return false;
}

LineGraphVerdict is_line_graph(const Graph& g) {
    if (g.order() > kLineGraphRecognitionBound) {
        throw GraphError("line-graph recognition supports order <= " + std::to_string(kLineGraphRecognitionBound));
    }
    if (!is_connected(g)) throw NotConnected("is_line_graph requires a connected graph");

    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return {false, {v, nb[i], nb[j], nb[k]}};
            }
    }

    // For each edge ab, the apexes c of odd triangles abc; any two such
    // apexes must be adjacent.
    for (auto [a, b] : g.edges()) {
        std::vector<Vertex> apexes;
        for (Vertex c : g.neighbors(a))
            if (c != b && g.adjacent(b, c) && is_odd_triangle(g, a, b, c)) apexes.push_back(c);
        for (std::size_t i = 0; i < apexes.size(); ++i)
            for (std::size_t j = i + 1; j < apexes.size(); ++j)
                if (!g.adjacent(apexes[i], apexes[j])) return {false, {a, b, apexes[i], apexes[j]}};
    }
    return {};
}

std::vector<Vertex> branching_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3) out.push_back(v);
    return out;
}

std::vector<Edge> pendent_edges(const Graph& g) {
    std::vector<Edge> out;
    for (auto e : g.edges())
        if ((g.degree(e.first) == 1) != (g.degree(e.second) == 1)) out.push_back(e);
    return out;
}

std::vector<PendentPath> pendent_paths(const Graph& g) {
    if (branching_vertices(g).empty()) throw GraphError("pendent paths need a branching vertex");
    std::vector<PendentPath> out;
    for (Vertex leaf : pendent_vertices(g)) {
        PendentPath p{{leaf}};
        Vertex prev = leaf, cur = g.neighbors(leaf)[0];
        p.vertices.push_back(cur);
        while (g.degree(cur) == 2) {
            auto nb = g.neighbors(cur);
            const Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            p.vertices.push_back(cur);
        }
        // A walk ending at another leaf means a path component; skip it.
        if (g.degree(cur) >= 3) out.push_back(std::move(p));
    }
    return out;
}

std::size_t adjacent_pendent_pairs(const Graph& g) {
    std::map<Vertex, std::size_t> per_attach;
    for (const auto& p : pendent_paths(g)) ++per_attach[p.attach_vertex()];
    std::size_t pairs = 0;
    for (auto [v, c] : per_attach) pairs += c * (c - 1) / 2;
    return pairs;
}

}  // namespace topoidx
