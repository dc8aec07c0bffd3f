#include <doctest.h>

#include "oracles.hpp"
#include "topoidx/linegraph.hpp"
#include "topoidx/smallgraph.hpp"
#include "topoidx/treegen.hpp"

using namespace topoidx;

namespace {

// legs of lengths 1, 2, 2 around vertex 0
Graph spider_122() { return Graph::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}}); }

const GraphUniverse& small_universe() {
    static const GraphUniverse u = connected_universe(1, 6);
    return u;
}

}  // namespace

TEST_CASE("line graphs of standard families") {
    for (std::size_t n = 2; n <= 9; ++n) {
        const Graph l = line_graph(path_graph(n));
        if (n == 2) {
            CHECK(l.order() == 1);
        } else {
            CHECK(classify_shape(l) == Shape::Path);
            CHECK(l.order() == n - 1);
        }
    }
    for (std::size_t n = 3; n <= 9; ++n) CHECK(oracle::isomorphic(line_graph(cycle_graph(n)), cycle_graph(n)));
    CHECK(oracle::isomorphic(line_graph(star_graph(3)), cycle_graph(3)));
    CHECK(oracle::isomorphic(line_graph(star_graph(4)), complete_graph(4)));
    CHECK_THROWS_AS(line_graph(Graph::from_edges(1, {})), GraphError);
}

TEST_CASE("size and degree identities over connected graphs of order <= 6") {
    for (const auto& k : small_universe().graphs) {
        if (k.size() == 0) continue;
        const Graph l = line_graph(k);
        REQUIRE(l.order() == k.size());
        std::size_t pairs = 0;
        for (auto d : k.degrees()) pairs += d * (d - 1) / 2;
        REQUIRE(l.size() == pairs);
        for (std::size_t i = 0; i < k.size(); ++i) {
            auto [u, v] = k.edges()[i];
            REQUIRE(l.degree(static_cast<Vertex>(i)) == k.degree(u) + k.degree(v) - 2);
        }
    }
}

TEST_CASE("recognition basics") {
    const auto claw = is_line_graph(star_graph(3));
    CHECK_FALSE(claw.is_line_graph);
    std::vector<Vertex> w = claw.witness;
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(is_line_graph(cycle_graph(5)).is_line_graph);
    CHECK(is_line_graph(complete_graph(5)).is_line_graph);
    CHECK_THROWS_AS(is_line_graph(path_graph(13)), GraphError);
}

TEST_CASE("K4 minus an edge with two pendant vertices fails the odd-triangle test") {
    // Triangles 012 and 013 share edge 01; vertices 4 and 5 make both odd.
    const Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 5}});
    const auto v = is_line_graph(g);
    CHECK_FALSE(v.is_line_graph);
    CHECK(v.witness.size() == 4);
}

TEST_CASE("every line graph of a small connected graph is recognised") {
    for (const auto& k : small_universe().graphs) {
        if (k.size() == 0 || k.size() > kLineGraphRecognitionBound) continue;
        REQUIRE(is_line_graph(line_graph(k)).is_line_graph);
    }
}

TEST_CASE("recognition agrees with root search on all connected graphs of order <= 6") {
    // Roots of an n-vertex connected line graph are connected with n edges
    // and at most n + 1 vertices.
    std::vector<Graph> line_graphs;
    for (std::size_t order = 2; order <= 7; ++order)
        for (const auto& k : enumerate_connected(order))
            if (k.size() <= 6) line_graphs.push_back(line_graph(k));

    std::size_t positives = 0, negatives = 0;
    for (const auto& g : small_universe().graphs) {
        bool found = false;
        for (const auto& l : line_graphs)
            if (oracle::isomorphic(g, l)) {
                found = true;
                break;
            }
        const auto verdict = is_line_graph(g);
        REQUIRE(verdict.is_line_graph == found);
        (found ? positives : negatives) += 1;
    }
    CHECK(positives > 0);
    CHECK(negatives > 0);
}

TEST_CASE("pendent structure") {
    const auto star = pendent_paths(star_graph(3));
    REQUIRE(star.size() == 3);
    for (const auto& p : star) {
        CHECK(p.length() == 1);
        CHECK(p.attach_vertex() == 0);
    }
    CHECK(adjacent_pendent_pairs(star_graph(3)) == 3);

    const auto spider = pendent_paths(spider_122());
    REQUIRE(spider.size() == 3);
    CHECK(spider[0].length() == 1);
    CHECK(spider[1].length() == 2);
    CHECK(spider[2].length() == 2);
    CHECK(spider[1].vertices == std::vector<Vertex>{3, 2, 0});
    CHECK(adjacent_pendent_pairs(spider_122()) == 3);

    CHECK_THROWS_AS(pendent_paths(cycle_graph(5)), GraphError);
    CHECK_THROWS_AS(pendent_paths(path_graph(5)), GraphError);

    CHECK(branching_vertices(spider_122()) == std::vector<Vertex>{0});
    CHECK(pendent_edges(spider_122()).size() == 3);
    CHECK(pendent_edges(path_graph(2)).empty());
}

TEST_CASE("line graphs of non-path, non-cycle roots have no adjacent pendent paths") {
    std::size_t checked = 0;
    for (const auto& k : small_universe().graphs) {
        if (k.size() == 0) continue;
        const Shape s = classify_shape(k);
        if (s == Shape::Path || s == Shape::Cycle) continue;
        const Graph l = line_graph(k);
        if (branching_vertices(l).empty()) continue;
        REQUIRE(adjacent_pendent_pairs(l) == 0);
        ++checked;
        // hence at most floor(m/2) pendent paths
        REQUIRE(pendent_paths(l).size() <= l.size() / 2);
    }
    CHECK(checked > 100);
}
