#include "topoidx/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

namespace topoidx::io {

using nlohmann::json;

std::string sig9(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string roundtrip(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_index_csv(std::ostream& out, std::span<const IndexRow> rows) {
    out << "# topoidx index v" << kCsvSchemaVersion << "\n";
    out << "graph6,n,m,randic,sum_connectivity,abc,abs,theta,sign\n";
    for (const auto& r : rows) {
        out << r.graph6 << ',' << r.n << ',' << r.m << ',' << sig9(r.report.randic) << ','
            << sig9(r.report.sum_connectivity) << ',' << sig9(r.report.abc) << ',' << sig9(r.report.abs) << ','
            << sig9(r.report.theta) << ',' << to_string(r.sign) << '\n';
    }
}

json index_json(std::span<const IndexRow> rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"graph6", r.graph6},
                       {"n", r.n},
                       {"m", r.m},
                       {"randic", roundtrip(r.report.randic)},
                       {"sum_connectivity", roundtrip(r.report.sum_connectivity)},
                       {"abc", roundtrip(r.report.abc)},
                       {"abs", roundtrip(r.report.abs)},
                       {"theta", roundtrip(r.report.theta)},
                       {"sign", to_string(r.sign)}});
    }
    return {{"schema", "topoidx-index"}, {"version", kCsvSchemaVersion}, {"rows", arr}};
}

void write_scan_csv(std::ostream& out, std::span<const ClassificationRecord> rows) {
    out << "# topoidx scan v" << kCsvSchemaVersion << "\n";
    out << "n,total_trees,theta_pos,theta_neg,theta_zero,tol,ratio_neg,min_abs_theta,min_abs_theta_graph6,"
           "recheck_candidates,recheck_nonzero\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.total_trees << ',' << r.count_theta_pos << ',' << r.count_theta_neg << ','
            << r.count_zero_within_tol << ',' << sig9(r.tol) << ',' << sig9(r.ratio_neg()) << ','
            << sig9(r.min_abs_theta) << ',' << r.min_abs_theta_graph6 << ',' << r.recheck_candidates << ','
            << r.recheck_nonzero << '\n';
    }
}

json scan_json(std::span<const ClassificationRecord> rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"total_trees", r.total_trees},
                       {"count_theta_pos", r.count_theta_pos},
                       {"count_theta_neg", r.count_theta_neg},
                       {"count_zero_within_tol", r.count_zero_within_tol},
                       {"tol", roundtrip(r.tol)},
                       {"ratio_neg", roundtrip(r.ratio_neg())},
                       {"min_abs_theta", roundtrip(r.min_abs_theta)},
                       {"min_abs_theta_graph6", r.min_abs_theta_graph6},
                       {"recheck_candidates", r.recheck_candidates},
                       {"recheck_nonzero", r.recheck_nonzero},
                       {"witnesses_neg", r.witnesses_neg}});
    }
    return {{"schema", "topoidx-scan"}, {"version", kCsvSchemaVersion}, {"rows", arr}};
}

void write_ties_csv(std::ostream& out, std::span<const TieRecord> rows) {
    out << "# topoidx near-ties v" << kCsvSchemaVersion << "\n";
    out << "rank,graph6,abc,abs,abs_theta\n";
    std::size_t rank = 1;
    for (const auto& r : rows) {
        out << rank++ << ',' << r.graph6 << ',' << sig9(r.abc) << ',' << sig9(r.abs) << ',' << sig9(r.abs_theta)
            << '\n';
    }
}

json ties_json(std::span<const TieRecord> rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"graph6", r.graph6},
                       {"abc", roundtrip(r.abc)},
                       {"abs", roundtrip(r.abs)},
                       {"abs_theta", roundtrip(r.abs_theta)}});
    }
    return {{"schema", "topoidx-near-ties"}, {"version", kCsvSchemaVersion}, {"rows", arr}};
}

json verification_json(const VerificationReport& r, bool include_timing) {
    json j = {{"schema", "topoidx-verify"},
              {"version", kCsvSchemaVersion},
              {"statement", to_string(r.statement)},
              {"universe", r.universe},
              {"universe_size", r.universe_size},
              {"checked", r.checked},
              {"hypothesis_holds", r.hypothesis_holds},
              {"tol", roundtrip(r.tol)},
              {"passed", r.passed()},
              {"conclusion_failures", r.conclusion_failures}};
    j["min_margin"] = r.min_margin ? json(roundtrip(*r.min_margin)) : json(nullptr);
    if (r.max_residual) j["max_residual"] = roundtrip(*r.max_residual);
    if (include_timing) j["elapsed_seconds"] = r.elapsed.count();
    return j;
}

}  // namespace topoidx::io
