#pragma once

#include <optional>
#include <vector>

#include "topoidx/graph.hpp"

namespace topoidx {

// Vertex i of the result is edge i of k (k.edges() order). Throws
// GraphError for an edgeless graph, NotConnected for a disconnected one.
Graph line_graph(const Graph& k);

inline constexpr std::size_t kLineGraphRecognitionBound = 12;

struct LineGraphVerdict {
    bool is_line_graph = true;
    // On failure: an induced claw (centre first) or the four vertices of two
    // odd triangles sharing an edge that do not induce K4.
    std::vector<Vertex> witness;
};

// Claw-free plus the odd-triangle condition. Throws GraphError above the
// order bound and NotConnected on disconnected input.
LineGraphVerdict is_line_graph(const Graph& g);

// A triangle is odd if some vertex is adjacent to an odd number of its vertices.
bool is_odd_triangle(const Graph& g, Vertex a, Vertex b, Vertex c);

struct PendentPath {
    std::vector<Vertex> vertices;  // leaf first, attach vertex last
    Vertex leaf() const { return vertices.front(); }
    Vertex attach_vertex() const { return vertices.back(); }
    std::size_t length() const { return vertices.size() - 1; }
};

std::vector<Vertex> branching_vertices(const Graph& g);

// Pendent edges: exactly one endpoint of degree 1.
std::vector<Edge> pendent_edges(const Graph& g);

// Walks from every leaf through degree-2 vertices to the first branching
// vertex. Sorted by leaf. Throws GraphError when there is no branching vertex.
std::vector<PendentPath> pendent_paths(const Graph& g);

// Unordered pairs of pendent paths with the same attach vertex.
std::size_t adjacent_pendent_pairs(const Graph& g);

}  // namespace topoidx
