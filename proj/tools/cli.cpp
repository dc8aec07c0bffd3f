#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "topoidx/graph6.hpp"
#include "topoidx/report_io.hpp"
#include "topoidx/smallgraph.hpp"
#include "topoidx/survey.hpp"
#include "topoidx/treegen.hpp"

namespace topoidx::cli {

namespace {

struct RunConfig {
    double tol = kDefaultZeroTol;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string format = "csv";
    std::string out_path;
    std::string in_path;
    std::uint64_t seed = 42;
    std::size_t witness_cap = 100;
    std::size_t max_order = 6;
    std::size_t min_order = 1;
    std::uint64_t trials = 10000;

    std::string range;
    std::string witnesses_path;
    std::size_t n = 0;
    std::size_t top_k = 4;
    std::string statement;
    std::string kind;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    auto to_n = [&](const std::string& part) -> std::size_t {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(part, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (part.empty() || pos != part.size()) throw UsageError("invalid order range '" + s + "'");
        return v;
    };
    const auto dots = s.find("..");
    std::size_t lo, hi;
    if (dots == std::string::npos) {
        lo = hi = to_n(s);
    } else {
        lo = to_n(s.substr(0, dots));
        hi = to_n(s.substr(dots + 2));
    }
    if (lo < 3 || lo > hi) throw UsageError("order range must satisfy 3 <= from <= to");
    return {lo, hi};
}

// Writes to --out when given, otherwise to the default stream.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out_path);
    f << text;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (cfg.format == a) return;
    throw UsageError("format '" + cfg.format + "' is not supported by this command");
}

int cmd_index(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    require_format(cfg, {"csv", "json"});
    std::ifstream file;
    std::istream* src = &in;
    if (!cfg.in_path.empty()) {
        file.open(cfg.in_path);
        if (!file) throw UsageError("cannot open " + cfg.in_path);
        src = &file;
    }
    std::vector<io::IndexRow> rows;
    bool failed = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(*src, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            const Graph g = parse_graph6(line);
            const IndexReport rep = index_report(g);
            rows.push_back({to_graph6(g), g.order(), g.size(), rep, sign_class(rep, cfg.tol)});
        } catch (const std::exception& e) {
            err << "line " << lineno << ": " << e.what() << "\n";
            failed = true;
        }
    }
    std::ostringstream text;
    if (cfg.format == "json") {
        text << io::index_json(rows).dump(2) << "\n";
    } else {
        io::write_index_csv(text, rows);
    }
    emit(cfg, out, text.str());
    return failed ? kUsage : kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv", "json", "graph6"});
    const auto [lo, hi] = parse_range(cfg.range);
    CensusOptions opts;
    opts.tol = cfg.tol;
    opts.workers = cfg.workers;
    opts.witness_cap = cfg.witness_cap;
    const auto rows = ratio_table(lo, hi, opts);

    std::ostringstream witnesses;
    for (const auto& r : rows)
        for (const auto& w : r.witnesses_neg) witnesses << w << "\n";
    if (!cfg.witnesses_path.empty()) {
        std::ofstream f(cfg.witnesses_path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + cfg.witnesses_path);
        f << witnesses.str();
    }

    std::ostringstream text;
    if (cfg.format == "json") {
        text << io::scan_json(rows).dump(2) << "\n";
    } else if (cfg.format == "graph6") {
        text << witnesses.str();
    } else {
        io::write_scan_csv(text, rows);
    }
    emit(cfg, out, text.str());
    return kOk;
}

int cmd_near_ties(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv", "json", "graph6"});
    if (cfg.n < 3) throw UsageError("near-ties requires n >= 3");
    if (cfg.top_k < 1) throw UsageError("top_k must be at least 1");
    const auto rows = find_near_ties(cfg.n, cfg.top_k, cfg.workers);
    std::ostringstream text;
    if (cfg.format == "json") {
        text << io::ties_json(rows).dump(2) << "\n";
    } else if (cfg.format == "graph6") {
        for (const auto& r : rows) text << r.graph6 << "\n";
    } else {
        io::write_ties_csv(text, rows);
    }
    emit(cfg, out, text.str());
    return kOk;
}

GraphUniverse universe_for(const RunConfig& cfg) {
    if (!cfg.in_path.empty()) {
        try {
            return load_universe(std::filesystem::path(cfg.in_path));
        } catch (const UniverseError& e) {
            throw UsageError(e.what());
        }
    }
    if (cfg.max_order > kMaxInternalOrder) {
        throw UsageError("internal universe supports --max-order <= " + std::to_string(kMaxInternalOrder) +
                         "; pass larger universes with --in");
    }
    if (cfg.min_order < 1 || cfg.min_order > cfg.max_order) throw UsageError("empty order range");
    return connected_universe(cfg.min_order, cfg.max_order, cfg.workers);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto st = parse_statement(cfg.statement);
    if (!st) throw UsageError("unknown statement '" + cfg.statement + "' (expected p1, p2, t1, t2, t3)");
    if (cfg.format != "json" && cfg.format != "csv") throw UsageError("verify emits JSON");

    VerificationReport rep;
    if (*st == Statement::P2) {
        if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
        rep = verify_prop2(cfg.trials, cfg.seed);
    } else {
        const GraphUniverse u = universe_for(cfg);
        switch (*st) {
            case Statement::P1: rep = verify_prop1(u, cfg.tol, cfg.workers); break;
            case Statement::T1: rep = verify_thm1(u, cfg.tol, cfg.workers); break;
            case Statement::T2: rep = verify_thm2(u, cfg.tol, cfg.workers); break;
            case Statement::T3: rep = verify_thm3(u, cfg.tol, cfg.workers); break;
            case Statement::P2: break;
        }
    }
    emit(cfg, out, io::verification_json(rep).dump(2) + "\n");
    if (!rep.passed()) {
        for (const auto& w : rep.conclusion_failures) err << "counterexample: " << w << "\n";
        return kCounterexample;
    }
    return kOk;
}

int cmd_enum(const RunConfig& cfg, std::ostream& out) {
    std::ostringstream text;
    if (cfg.kind == "trees") {
        if (cfg.n < 1) throw UsageError("tree order must be at least 1");
        TreeStream s = enumerate_trees(cfg.n);
        while (s.next()) text << to_graph6(s.graph()) << "\n";
    } else if (cfg.kind == "connected") {
        if (cfg.n < 1 || cfg.n > kMaxInternalOrder) {
            throw UsageError("connected enumeration supports 1 <= n <= " + std::to_string(kMaxInternalOrder));
        }
        for (const auto& g : enumerate_connected(cfg.n, cfg.workers)) text << to_graph6(g) << "\n";
    } else {
        throw UsageError("unknown kind '" + cfg.kind + "' (expected trees or connected)");
    }
    emit(cfg, out, text.str());
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Degree-based topological indices, tree census and theorem verification", "topoidx"};
    app.set_config("--config", "", "TOML/INI file mirroring the command-line flags");
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tol, "zero tolerance for theta")->check(CLI::PositiveNumber);
        sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1, 1024));
        sub->add_option("--format", cfg.format, "csv, json or graph6");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    };

    auto* index = app.add_subcommand("index", "index values for graph6 input");
    common(index);
    index->add_option("--in", cfg.in_path, "graph6 input file (default stdin)");

    auto* scan = app.add_subcommand("scan", "sign census of all trees over an order range");
    common(scan);
    scan->add_option("range", cfg.range, "order or range, e.g. 3..15")->required();
    scan->add_option("--witness-cap", cfg.witness_cap, "negative witnesses kept per order");
    scan->add_option("--witnesses", cfg.witnesses_path, "also write negative witnesses as graph6");

    auto* ties = app.add_subcommand("near-ties", "trees with the smallest |theta|");
    common(ties);
    ties->add_option("n", cfg.n, "tree order")->required();
    ties->add_option("top_k", cfg.top_k, "number of records");

    auto* verify = app.add_subcommand("verify", "check a statement over a graph universe");
    common(verify);
    verify->add_option("statement", cfg.statement, "p1, p2, t1, t2 or t3")->required();
    verify->add_option("--max-order", cfg.max_order, "largest order of the internal universe");
    verify->add_option("--min-order", cfg.min_order, "smallest order of the internal universe");
    verify->add_option("--in", cfg.in_path, "graph6 universe file instead of the internal one");
    verify->add_option("--trials", cfg.trials, "random trials (p2)");
    verify->add_option("--seed", cfg.seed, "random seed (p2)");
    verify->add_option("--witness-cap", cfg.witness_cap, "unused; accepted for flag symmetry");

    auto* enumerate = app.add_subcommand("enum", "enumerate trees or connected graphs as graph6");
    common(enumerate);
    enumerate->add_option("kind", cfg.kind, "trees or connected")->required();
    enumerate->add_option("n", cfg.n, "order")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*index) return cmd_index(cfg, in, out, err);
        if (*scan) return cmd_scan(cfg, out);
        if (*ties) return cmd_near_ties(cfg, out);
        if (*verify) return cmd_verify(cfg, out, err);
        if (*enumerate) return cmd_enum(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace topoidx::cli
