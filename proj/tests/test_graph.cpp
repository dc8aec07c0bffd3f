#include <doctest.h>

#include <algorithm>
#include <random>

#include "topoidx/graph.hpp"
#include "topoidx/treegen.hpp"

using namespace topoidx;

namespace {
std::vector<std::uint32_t> degs(const Graph& g) { return {g.degrees().begin(), g.degrees().end()}; }
}  // namespace

TEST_CASE("from_edges builds symmetric adjacency with cached degrees") {
    const Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(degs(c3) == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(c3.size() == 3);

    const Graph p2 = Graph::from_edges(2, {{0, 1}});
    CHECK(degs(p2) == std::vector<std::uint32_t>{1, 1});

    const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(degs(star) == std::vector<std::uint32_t>{3, 1, 1, 1});
    for (Vertex v = 0; v < 4; ++v)
        for (Vertex w : star.neighbors(v)) CHECK(star.adjacent(w, v));
}

TEST_CASE("from_edges rejects bad input with distinct errors") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), VertexOutOfRange);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), SelfLoop);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), DuplicateEdge);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), GraphError);
}

TEST_CASE("degree sum is twice the size") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        std::vector<Edge> e;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (rng() % 3 == 0) e.emplace_back(i, j);
        const Graph g = Graph::from_edges(n, e);
        std::uint64_t sum = 0;
        for (auto d : g.degrees()) sum += d;
        CHECK(sum == 2 * g.size());
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(path_graph(5)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph::from_edges(1, {})));
}

TEST_CASE("pendent_vertices and min_degree") {
    CHECK(pendent_vertices(path_graph(4)) == std::vector<Vertex>{0, 3});
    CHECK(pendent_vertices(cycle_graph(5)).empty());
    CHECK(pendent_vertices(star_graph(3)) == std::vector<Vertex>{1, 2, 3});
    CHECK(min_degree(cycle_graph(7)) == 2);
    CHECK(min_degree(path_graph(3)) == 1);
    CHECK(min_degree(complete_graph(4)) == 3);
}

TEST_CASE("subdivide_at_degree2") {
    const Graph c4 = subdivide_at_degree2(cycle_graph(3), 0, {0, 1});
    CHECK(classify_shape(c4) == Shape::Cycle);
    CHECK(c4.order() == 4);

    const Graph p5 = subdivide_at_degree2(path_graph(4), 1, {1, 2});
    CHECK(classify_shape(p5) == Shape::Path);
    CHECK(p5.order() == 5);
    CHECK(p5.degree(4) == 2);

    CHECK_THROWS_AS(subdivide_at_degree2(star_graph(3), 0, {0, 1}), GraphError);
    CHECK_THROWS_AS(subdivide_at_degree2(path_graph(4), 1, {2, 3}), GraphError);
}

TEST_CASE("subdivision adds one vertex, one edge and one degree 2") {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 300) {
        const std::size_t n = 3 + rng() % 15;
        std::vector<Edge> e;
        for (Vertex v = 1; v < n; ++v) e.emplace_back(rng() % v, v);
        const Graph g = Graph::from_edges(n, e);
        std::vector<Vertex> twos;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) == 2) twos.push_back(v);
        if (twos.empty()) continue;
        const Vertex x = twos[rng() % twos.size()];
        const Vertex w = g.neighbors(x)[rng() % 2];
        const Graph s = subdivide_at_degree2(g, x, {w, x});
        CHECK(s.order() == n + 1);
        CHECK(s.size() == g.size() + 1);
        auto before = degs(g);
        before.push_back(2);
        auto after = degs(s);
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
        ++done;
    }
}

TEST_CASE("classify_shape") {
    CHECK(classify_shape(path_graph(6)) == Shape::Path);
    CHECK(classify_shape(cycle_graph(6)) == Shape::Cycle);
    CHECK(classify_shape(star_graph(4)) == Shape::Star);
    CHECK(classify_shape(path_graph(3)) == Shape::Path);
    CHECK(classify_shape(path_graph(1)) == Shape::Path);
    CHECK(classify_shape(path_graph(2)) == Shape::Path);
    CHECK(classify_shape(complete_graph(4)) == Shape::Other);
    // spider with legs 2,2,2,2,1,1: the smallest tree with ABC < ABS
    const Graph spider = tree_from_levels(std::vector<std::uint8_t>{1, 2, 3, 2, 3, 2, 3, 2, 3, 2, 2});
    CHECK(classify_shape(spider) == Shape::Other);
    CHECK_THROWS_AS(classify_shape(Graph::from_edges(4, {{0, 1}, {2, 3}})), NotConnected);
}
