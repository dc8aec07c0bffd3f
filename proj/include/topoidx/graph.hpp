#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topoidx {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class VertexOutOfRange : public GraphError {
public:
    using GraphError::GraphError;
};

class SelfLoop : public GraphError {
public:
    using GraphError::GraphError;
};

class DuplicateEdge : public GraphError {
public:
    using GraphError::GraphError;
};

class NotConnected : public GraphError {
public:
    using GraphError::GraphError;
};

// Simple undirected graph on vertices [0, n). Neighbor lists are sorted and
// degrees are cached. Immutable once built.
class Graph {
public:
    // Throws VertexOutOfRange, SelfLoop or DuplicateEdge.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::uint32_t degree(Vertex v) const { return degrees_[v]; }
    std::span<const std::uint32_t> degrees() const { return degrees_; }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::span<const Edge> edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint32_t> degrees_;
    std::vector<Edge> edges_;
};

enum class Shape { Path, Cycle, Star, Other };

std::string to_string(Shape s);

bool is_connected(const Graph& g);

std::vector<Vertex> pendent_vertices(const Graph& g);

std::uint32_t min_degree(const Graph& g);
std::uint32_t max_degree(const Graph& g);

// Inserts a new vertex y (= n) on the edge e = {x, w}, with x of degree 2.
// The result has edges x-y and y-w in place of x-w.
Graph subdivide_at_degree2(const Graph& g, Vertex x, Edge e);

// Path takes precedence over Star, so P3 is a Path.
Shape classify_shape(const Graph& g);

// Builders for the standard families used throughout the tests and tools.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);

// Vertex-disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace topoidx
