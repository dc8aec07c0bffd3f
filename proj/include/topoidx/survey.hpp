#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topoidx/graph.hpp"
#include "topoidx/indices.hpp"
#include "topoidx/smallgraph.hpp"

namespace topoidx {

struct CensusOptions {
    double tol = kDefaultZeroTol;
    std::size_t witness_cap = 100;
    int workers = 1;
    // Trees with |theta| at or below this are re-evaluated in extended
    // precision and classified from that value.
    double recheck_window = 1e-6;
    std::size_t batch = 1 << 14;
};

// Sign census of all free trees of one order.
struct ClassificationRecord {
    std::size_t n = 0;
    std::uint64_t total_trees = 0;
    std::uint64_t count_theta_pos = 0;
    std::uint64_t count_theta_neg = 0;
    std::uint64_t count_zero_within_tol = 0;
    double tol = kDefaultZeroTol;
    double min_abs_theta = 0.0;
    std::string min_abs_theta_graph6;
    std::vector<std::string> witnesses_neg;  // first witness_cap in generation order
    std::uint64_t recheck_candidates = 0;
    std::uint64_t recheck_nonzero = 0;

    double ratio_neg() const {
        return total_trees ? static_cast<double>(count_theta_neg) / static_cast<double>(total_trees) : 0.0;
    }
};

// Folds `later` (which follows `acc` in generation order) into `acc`.
// Associative; `acc` must be empty or share n and tol with `later`.
void merge_into(ClassificationRecord& acc, const ClassificationRecord& later, std::size_t witness_cap);

// Level-sequence fast path with the OpenMP batch kernel.
ClassificationRecord classify_trees(std::size_t n, const CensusOptions& opts = {});

// Reference census: materialises every tree and runs index_report on it.
ClassificationRecord classify_trees_serial(std::size_t n, const CensusOptions& opts = {});

std::vector<ClassificationRecord> ratio_table(std::size_t n_from, std::size_t n_to, const CensusOptions& opts = {});

struct TieRecord {
    std::string graph6;
    double abc = 0.0;
    double abs = 0.0;
    double abs_theta = 0.0;
};

// The top_k trees of order n with the smallest |theta|, ascending, ties
// broken by graph6. top_k is clamped to the number of trees.
std::vector<TieRecord> find_near_ties(std::size_t n, std::size_t top_k, int workers = 1);

struct NegativeTreeResult {
    Graph graph;
    std::string graph6;
    std::size_t order = 0;
    bool unique = false;  // only negative tree of its order
};

// Scans n = 3, 4, ... up to max_order for the first tree with theta < -tol.
std::optional<NegativeTreeResult> smallest_negative_tree(const CensusOptions& opts = {}, std::size_t max_order = 22);

enum class Statement { P1, P2, T1, T2, T3 };

std::string to_string(Statement s);
std::optional<Statement> parse_statement(std::string_view s);

struct VerificationReport {
    Statement statement = Statement::P1;
    std::string universe;
    std::uint64_t universe_size = 0;
    std::uint64_t checked = 0;
    std::uint64_t hypothesis_holds = 0;
    std::vector<std::string> conclusion_failures;  // graph6 witnesses
    double tol = kDefaultZeroTol;
    // Smallest ABS - ABC seen where the conclusion is a strict inequality.
    std::optional<double> min_margin;
    // Largest |theta(G) - theta(G*)| seen (P2 only).
    std::optional<double> max_residual;
    std::chrono::duration<double> elapsed{};

    bool passed() const { return conclusion_failures.empty(); }
};

// Graphs with min degree >= 2: theta <= tol, and |theta| <= tol iff a cycle.
VerificationReport verify_prop1(const GraphUniverse& u, double tol, int workers = 1);

// Seeded random trees and unicyclic graphs, subdivided at a degree-2 vertex.
inline constexpr double kSubdivisionResidualTol = 1e-12;
VerificationReport verify_prop2(std::uint64_t trials, std::uint64_t seed);

// checked counts roots that are not paths or cycles; hypothesis_holds counts
// those of order >= 5. Conclusion: theta(L(K)) < -tol.
VerificationReport verify_thm1(const GraphUniverse& roots, double tol, int workers = 1);

bool check_thm2_hypothesis(const Graph& g);
VerificationReport verify_thm2(const GraphUniverse& u, double tol, int workers = 1);

bool check_thm3_hypothesis(const Graph& g);
VerificationReport verify_thm3(const GraphUniverse& u, double tol, int workers = 1);

}  // namespace topoidx
