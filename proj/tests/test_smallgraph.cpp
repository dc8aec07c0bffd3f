#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "topoidx/canonical.hpp"
#include "topoidx/graph6.hpp"
#include "topoidx/smallgraph.hpp"
#include "topoidx/treegen.hpp"

using namespace topoidx;

TEST_CASE("connected graph counts for n = 1..7") {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto graphs = enumerate_connected(n);
        CHECK(graphs.size() == expected[n - 1]);
        std::set<CanonicalKey> keys;
        for (const auto& g : graphs) {
            REQUIRE(g.order() == n);
            REQUIRE(is_connected(g));
            keys.insert(canonical_key(g));
        }
        CHECK(keys.size() == graphs.size());
    }
}

TEST_CASE("n = 3 gives the path and the triangle") {
    const auto g = enumerate_connected(3);
    REQUIRE(g.size() == 2);
    std::set<Shape> shapes{classify_shape(g[0]), classify_shape(g[1])};
    CHECK(shapes == std::set<Shape>{Shape::Path, Shape::Cycle});
}

TEST_CASE("brute-force isomorphism classes agree for n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto reps = oracle::dedup_bruteforce(oracle::all_connected_labeled(n));
        const auto ours = enumerate_connected(n);
        REQUIRE(reps.size() == ours.size());
        for (const auto& r : reps) {
            int matches = 0;
            for (const auto& g : ours) matches += oracle::isomorphic(r, g);
            REQUIRE(matches == 1);
        }
    }
}

TEST_CASE("OpenMP enumeration equals the serial reference") {
    for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_connected(n, 4) == enumerate_connected(n, 1));
}

TEST_CASE("order outside the internal range") {
    CHECK_THROWS_AS(enumerate_connected(0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_connected(8), std::out_of_range);
}

TEST_CASE("load_universe") {
    SUBCASE("trees of order 7") {
        std::stringstream ss;
        ss << "# trees of order 7\n";
        auto s = enumerate_trees(7);
        while (s.next()) ss << to_graph6(s.graph()) << "\n";
        const auto u = load_universe(ss, 7);
        CHECK(u.count() == count_trees(7));
        CHECK(u.source == UniverseSource::External);
    }
    SUBCASE("empty file") {
        std::stringstream ss;
        CHECK(load_universe(ss).count() == 0);
    }
    SUBCASE("order mismatch carries the line number") {
        std::stringstream ss;
        ss << to_graph6(path_graph(7)) << "\n" << to_graph6(path_graph(6)) << "\n";
        try {
            load_universe(ss, 7);
            FAIL("expected an error");
        } catch (const UniverseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("disconnected and malformed lines") {
        std::stringstream a;
        a << "C?\n";  // four isolated vertices
        CHECK_THROWS_AS(load_universe(a), UniverseError);
        std::stringstream b;
        b << "\n#c\nCh\nzz\n";
        try {
            load_universe(b);
            FAIL("expected an error");
        } catch (const UniverseError& e) {
            CHECK(e.line() == 4);
        }
    }
    SUBCASE("connected universe over a range") {
        const auto u = connected_universe(1, 6);
        CHECK(u.count() == 1 + 1 + 2 + 6 + 21 + 112);
        CHECK_FALSE(u.order.has_value());
    }
}
