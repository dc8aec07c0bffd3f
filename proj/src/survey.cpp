#include "topoidx/survey.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <tuple>

#include "topoidx/graph6.hpp"
#include "topoidx/kernels.hpp"
#include "topoidx/linegraph.hpp"
#include "topoidx/treegen.hpp"

namespace topoidx {

namespace {

using Clock = std::chrono::steady_clock;

void check_census_args(std::size_t n, const CensusOptions& opts) {
    if (n < 3) throw std::invalid_argument("census requires n >= 3");
    if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (opts.workers < 1) throw std::invalid_argument("worker count must be at least 1");
}

// Adds one tree to a record. `theta_ext` is only invoked for recheck candidates.
template <class ExtendedTheta, class Graph6Of>
void absorb(ClassificationRecord& r, double theta, const CensusOptions& opts, ExtendedTheta&& theta_ext,
            Graph6Of&& graph6_of) {
    ++r.total_trees;
    double decided = theta;
    if (std::abs(theta) <= opts.recheck_window) {
        ++r.recheck_candidates;
        decided = static_cast<double>(theta_ext());
        if (std::abs(decided) > opts.tol) ++r.recheck_nonzero;
    }
    switch (sign_class(decided, opts.tol)) {
        case SignClass::Positive: ++r.count_theta_pos; break;
        case SignClass::ZeroWithinTol: ++r.count_zero_within_tol; break;
        case SignClass::Negative:
            ++r.count_theta_neg;
            if (r.witnesses_neg.size() < opts.witness_cap) r.witnesses_neg.push_back(graph6_of());
            break;
    }
    if (r.total_trees == 1 || std::abs(decided) < r.min_abs_theta) {
        r.min_abs_theta = std::abs(decided);
        r.min_abs_theta_graph6 = graph6_of();
    }
}

ClassificationRecord empty_record(std::size_t n, double tol) {
    ClassificationRecord r;
    r.n = n;
    r.tol = tol;
    return r;
}

// Pulls up to `limit` trees into a flat buffer; returns how many.
std::size_t fill_batch(FreeTreeGenerator& gen, std::vector<std::uint8_t>& flat, std::size_t limit) {
    const std::size_t n = gen.order();
    flat.clear();
    std::size_t count = 0;
    while (count < limit && gen.next()) {
        auto lv = gen.levels();
        flat.insert(flat.end(), lv.begin(), lv.end());
        ++count;
    }
    flat.resize(count * n);
    return count;
}

void run_kernel(std::span<const std::uint8_t> flat, std::size_t n, std::span<AbcAbs> out, int workers) {
    if (workers > 1) {
        kernels::tree_abc_abs_omp(flat, n, out, workers);
    } else {
        kernels::tree_abc_abs_serial(flat, n, out);
    }
}

template <class Fn>
auto evaluate_all(const std::vector<Graph>& graphs, Fn&& fn, int workers) {
    using Outcome = decltype(fn(graphs.front()));
    std::vector<Outcome> out(graphs.size());
    const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(1, workers))
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(graphs[static_cast<std::size_t>(i)]);
    return out;
}

void note_margin(VerificationReport& r, double margin) {
    if (!r.min_margin || margin < *r.min_margin) r.min_margin = margin;
}

struct StrictOutcome {
    bool applies = false;
    bool hypothesis = false;
    double theta = 0.0;
};

// Shared driver for statements whose conclusion is theta < -tol.
template <class Fn>
VerificationReport verify_strict(Statement s, const GraphUniverse& u, double tol, int workers, Fn&& classify) {
    const auto start = Clock::now();
    VerificationReport r;
    r.statement = s;
    r.universe = u.description;
    r.universe_size = u.count();
    r.tol = tol;
    const auto outcomes = evaluate_all(u.graphs, classify, workers);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const StrictOutcome& o = outcomes[i];
        if (!o.applies) continue;
        ++r.checked;
        if (!o.hypothesis) continue;
        ++r.hypothesis_holds;
        note_margin(r, -o.theta);
        if (!(o.theta < -tol)) r.conclusion_failures.push_back(to_graph6(u.graphs[i]));
    }
    r.elapsed = Clock::now() - start;
    return r;
}

}  // namespace

void merge_into(ClassificationRecord& acc, const ClassificationRecord& later, std::size_t witness_cap) {
    if (later.total_trees == 0) return;
    if (acc.total_trees == 0) {
        acc.n = later.n;
        acc.tol = later.tol;
    }
    if (acc.total_trees == 0 || later.min_abs_theta < acc.min_abs_theta) {
        acc.min_abs_theta = later.min_abs_theta;
        acc.min_abs_theta_graph6 = later.min_abs_theta_graph6;
    }
    acc.total_trees += later.total_trees;
    acc.count_theta_pos += later.count_theta_pos;
    acc.count_theta_neg += later.count_theta_neg;
    acc.count_zero_within_tol += later.count_zero_within_tol;
    acc.recheck_candidates += later.recheck_candidates;
    acc.recheck_nonzero += later.recheck_nonzero;
    for (const auto& w : later.witnesses_neg) {
        if (acc.witnesses_neg.size() >= witness_cap) break;
        acc.witnesses_neg.push_back(w);
    }
}

ClassificationRecord classify_trees(std::size_t n, const CensusOptions& opts) {
    check_census_args(n, opts);
    ClassificationRecord total = empty_record(n, opts.tol);
    FreeTreeGenerator gen(n);
    std::vector<std::uint8_t> flat;
    std::vector<AbcAbs> values(opts.batch);
    std::vector<DegreePair> pairs;
    std::vector<std::uint32_t> degree;
    for (;;) {
        const std::size_t count = fill_batch(gen, flat, opts.batch);
        if (count == 0) break;
        run_kernel(flat, n, std::span(values).first(count), opts.workers);

        ClassificationRecord part = empty_record(n, opts.tol);
        for (std::size_t t = 0; t < count; ++t) {
            const auto levels = std::span<const std::uint8_t>(flat).subspan(t * n, n);
            absorb(
                part, values[t].theta(), opts,
                [&] {
                    tree_degree_pairs(levels, pairs, degree);
                    return theta_extended(pairs);
                },
                [&] { return to_graph6(tree_from_levels(levels)); });
        }
        merge_into(total, part, opts.witness_cap);
    }
    return total;
}

ClassificationRecord classify_trees_serial(std::size_t n, const CensusOptions& opts) {
    check_census_args(n, opts);
    ClassificationRecord r = empty_record(n, opts.tol);
    TreeStream stream = enumerate_trees(n);
    while (stream.next()) {
        const Graph g = stream.graph();
        const IndexReport rep = index_report(g);
        absorb(
            r, rep.theta, opts, [&] { return theta_extended(g); }, [&] { return to_graph6(g); });
    }
    return r;
}

std::vector<ClassificationRecord> ratio_table(std::size_t n_from, std::size_t n_to, const CensusOptions& opts) {
    if (n_from < 3 || n_from > n_to) throw std::invalid_argument("ratio_table requires 3 <= n_from <= n_to");
    std::vector<ClassificationRecord> rows;
    for (std::size_t n = n_from; n <= n_to; ++n) rows.push_back(classify_trees(n, opts));
    return rows;
}

std::vector<TieRecord> find_near_ties(std::size_t n, std::size_t top_k, int workers) {
    if (n < 3) throw std::invalid_argument("near-tie search requires n >= 3");
    if (top_k < 1) throw std::invalid_argument("top_k must be at least 1");
    auto worse = [](const TieRecord& a, const TieRecord& b) {
        return std::tie(a.abs_theta, a.graph6) < std::tie(b.abs_theta, b.graph6);
    };
    // max-heap on (|theta|, graph6): top() is the current worst kept record
    std::priority_queue<TieRecord, std::vector<TieRecord>, decltype(worse)> heap(worse);

    constexpr std::size_t batch = 1 << 14;
    FreeTreeGenerator gen(n);
    std::vector<std::uint8_t> flat;
    std::vector<AbcAbs> values(batch);
    for (;;) {
        const std::size_t count = fill_batch(gen, flat, batch);
        if (count == 0) break;
        run_kernel(flat, n, std::span(values).first(count), workers);
        for (std::size_t t = 0; t < count; ++t) {
            const double a = std::abs(values[t].theta());
            if (heap.size() == top_k && a > heap.top().abs_theta) continue;
            TieRecord rec{to_graph6(tree_from_levels(std::span<const std::uint8_t>(flat).subspan(t * n, n))),
                          values[t].abc, values[t].abs, a};
            if (heap.size() < top_k) {
                heap.push(std::move(rec));
            } else if (worse(rec, heap.top())) {
                heap.pop();
                heap.push(std::move(rec));
            }
        }
    }
    std::vector<TieRecord> out;
    out.reserve(heap.size());
    while (!heap.empty()) {
        out.push_back(heap.top());
        heap.pop();
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<NegativeTreeResult> smallest_negative_tree(const CensusOptions& opts, std::size_t max_order) {
    for (std::size_t n = 3; n <= max_order; ++n) {
        CensusOptions o = opts;
        o.witness_cap = std::max<std::size_t>(o.witness_cap, 1);
        const ClassificationRecord rec = classify_trees(n, o);
        if (rec.count_theta_neg == 0) continue;
        NegativeTreeResult res{parse_graph6(rec.witnesses_neg.front()), rec.witnesses_neg.front(), n,
                               rec.count_theta_neg == 1};
        return res;
    }
    return std::nullopt;
}

std::string to_string(Statement s) {
    switch (s) {
        case Statement::P1: return "p1";
        case Statement::P2: return "p2";
        case Statement::T1: return "t1";
        case Statement::T2: return "t2";
        case Statement::T3: return "t3";
    }
    return "p1";
}

std::optional<Statement> parse_statement(std::string_view s) {
    for (auto st : {Statement::P1, Statement::P2, Statement::T1, Statement::T2, Statement::T3})
        if (to_string(st) == s) return st;
    return std::nullopt;
}

VerificationReport verify_prop1(const GraphUniverse& u, double tol, int workers) {
    const auto start = Clock::now();
    VerificationReport r;
    r.statement = Statement::P1;
    r.universe = u.description;
    r.universe_size = u.count();
    r.checked = u.count();
    r.tol = tol;

    struct Outcome {
        bool hypothesis = false;
        bool cycle = false;
        double theta = 0.0;
    };
    const auto outcomes = evaluate_all(
        u.graphs,
        [](const Graph& g) {
            Outcome o;
            if (g.order() < 2 || min_degree(g) < 2) return o;
            o.hypothesis = true;
            o.cycle = classify_shape(g) == Shape::Cycle;
            o.theta = index_report(g).theta;
            return o;
        },
        workers);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const Outcome& o = outcomes[i];
        if (!o.hypothesis) continue;
        ++r.hypothesis_holds;
        const bool zero = std::abs(o.theta) <= tol;
        if (!o.cycle) note_margin(r, -o.theta);
        if (o.theta > tol || zero != o.cycle) r.conclusion_failures.push_back(to_graph6(u.graphs[i]));
    }
    r.elapsed = Clock::now() - start;
    return r;
}

VerificationReport verify_prop2(std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    const auto start = Clock::now();
    VerificationReport r;
    r.statement = Statement::P2;
    r.universe = "random trees and unicyclic graphs, orders 3..40, seed " + std::to_string(seed);
    r.tol = kSubdivisionResidualTol;
    r.max_residual = 0.0;

    std::mt19937_64 rng(seed);
    // Modulo draw: platform-independent, and uniformity is not needed.
    auto draw = [&rng](std::uint64_t k) { return static_cast<Vertex>(rng() % k); };

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const bool unicyclic = trial % 2 == 1;
        Graph g = Graph::from_edges(1, {});
        std::vector<Vertex> twos;
        do {
            const std::size_t n = 3 + draw(38);
            std::vector<Edge> edges;
            for (Vertex v = 1; v < n; ++v) edges.emplace_back(draw(v), v);
            if (unicyclic) {
                for (;;) {
                    Vertex a = draw(n), b = draw(n);
                    if (a == b) continue;
                    Edge e{std::min(a, b), std::max(a, b)};
                    if (std::find(edges.begin(), edges.end(), e) != edges.end())
                        continue;
                    edges.push_back(e);
                    break;
                }
            }
            g = Graph::from_edges(n, edges);
            twos.clear();
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.degree(v) == 2) twos.push_back(v);
        } while (twos.empty());

        const Vertex x = twos[draw(twos.size())];
        const Vertex w = g.neighbors(x)[draw(2)];
        const Graph sub = subdivide_at_degree2(g, x, {x, w});
        const double residual = std::abs(index_report(g).theta - index_report(sub).theta);
        ++r.universe_size;
        ++r.checked;
        ++r.hypothesis_holds;
        r.max_residual = std::max(*r.max_residual, residual);
        if (!(residual <= kSubdivisionResidualTol)) r.conclusion_failures.push_back(to_graph6(g));
    }
    r.elapsed = Clock::now() - start;
    return r;
}

VerificationReport verify_thm1(const GraphUniverse& roots, double tol, int workers) {
    return verify_strict(Statement::T1, roots, tol, workers, [](const Graph& k) {
        StrictOutcome o;
        if (k.size() == 0) return o;
        const Shape s = classify_shape(k);
        if (s == Shape::Path || s == Shape::Cycle) return o;
        o.applies = true;
        if (k.order() < 5) return o;
        o.hypothesis = true;
        o.theta = index_report(line_graph(k)).theta;
        return o;
    });
}

bool check_thm2_hypothesis(const Graph& g) {
    const std::size_t m = g.size();
    if (m == 0) return false;
    for (auto d : g.degrees())
        if (d == 2) return false;
    return pendent_vertices(g).size() <= m / 2;
}

VerificationReport verify_thm2(const GraphUniverse& u, double tol, int workers) {
    return verify_strict(Statement::T2, u, tol, workers, [](const Graph& g) {
        StrictOutcome o{true, check_thm2_hypothesis(g), 0.0};
        if (o.hypothesis) o.theta = index_report(g).theta;
        return o;
    });
}

bool check_thm3_hypothesis(const Graph& g) {
    const std::size_t m = g.size();
    if (m == 0) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) continue;
        for (Vertex w : g.neighbors(v)) {
            const auto d = g.degree(w);
            if (d >= 2 && d <= 4) return false;
        }
    }
    return pendent_vertices(g).size() <= m / 2;
}

VerificationReport verify_thm3(const GraphUniverse& u, double tol, int workers) {
    return verify_strict(Statement::T3, u, tol, workers, [](const Graph& g) {
        StrictOutcome o{true, check_thm3_hypothesis(g), 0.0};
        if (o.hypothesis) o.theta = index_report(g).theta;
        return o;
    });
}

}  // namespace topoidx
