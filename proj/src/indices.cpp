#include "topoidx/indices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace topoidx {

namespace {

void check_degrees(std::uint32_t du, std::uint32_t dv) {
    if (du < 1 || dv < 1) throw std::domain_error("edge degrees must be at least 1");
}

std::vector<DegreePair> degree_pairs(const Graph& g) {
    std::vector<DegreePair> pairs;
    pairs.reserve(g.size());
    for (auto [u, v] : g.edges()) {
        const auto a = g.degree(u), b = g.degree(v);
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return pairs;
}

}  // namespace

double randic_edge(std::uint32_t du, std::uint32_t dv) {
    check_degrees(du, dv);
    return 1.0 / std::sqrt(static_cast<double>(du) * dv);
}

double sc_edge(std::uint32_t du, std::uint32_t dv) {
    check_degrees(du, dv);
    return 1.0 / std::sqrt(static_cast<double>(du) + dv);
}

double abc_edge(std::uint32_t du, std::uint32_t dv) {
    check_degrees(du, dv);
    const double s = static_cast<double>(du) + dv;
    return std::sqrt((s - 2.0) / (static_cast<double>(du) * dv));
}

double abs_edge(std::uint32_t du, std::uint32_t dv) {
    check_degrees(du, dv);
    const double s = static_cast<double>(du) + dv;
    return std::sqrt((s - 2.0) / s);
}

double f(std::uint32_t x, std::uint32_t y) {
    if (x < 1 || y < x || y < 2) {
        throw std::domain_error("f(x, y) requires y >= x >= 1 and y >= 2");
    }
    return abs_edge(x, y) - abc_edge(x, y);
}

AbcAbs abc_abs_from_degree_pairs(std::span<DegreePair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    CompensatedSum abc, abs;
    for (auto [a, b] : pairs) {
        abc.add(abc_edge(a, b));
        abs.add(abs_edge(a, b));
    }
    return {abc.value(), abs.value()};
}

IndexReport report_from_degree_pairs(std::span<DegreePair> pairs) {
    const AbcAbs core = abc_abs_from_degree_pairs(pairs);
    CompensatedSum r, sc;
    for (auto [a, b] : pairs) {
        r.add(randic_edge(a, b));
        sc.add(sc_edge(a, b));
    }
    return {r.value(), sc.value(), core.abc, core.abs, core.theta()};
}

IndexReport index_report(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("index_report requires a connected graph");
    auto pairs = degree_pairs(g);
    return report_from_degree_pairs(pairs);
}

ExtendedReal theta_extended(std::span<const DegreePair> pairs) {
    ExtendedReal abc = 0, abs = 0;
    for (auto [a, b] : pairs) {
        check_degrees(a, b);
        const ExtendedReal s = ExtendedReal(a) + b;
        abc += sqrt((s - 2) / (ExtendedReal(a) * b));
        abs += sqrt((s - 2) / s);
    }
    return abc - abs;
}

ExtendedReal theta_extended(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("theta_extended requires a connected graph");
    return theta_extended(degree_pairs(g));
}

std::string to_string(SignClass c) {
    switch (c) {
        case SignClass::Positive: return "positive";
        case SignClass::Negative: return "negative";
        case SignClass::ZeroWithinTol: return "zero";
    }
    return "zero";
}

SignClass sign_class(double theta, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (std::abs(theta) <= tol) return SignClass::ZeroWithinTol;
    return theta > 0.0 ? SignClass::Positive : SignClass::Negative;
}

}  // namespace topoidx
