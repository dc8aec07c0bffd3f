#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "topoidx/graph.hpp"

namespace topoidx {

using ExtendedReal = boost::multiprecision::cpp_bin_float_quad;

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

// Per-edge terms, functions of the endpoint degrees. All throw
// std::domain_error on a degree below 1.
double randic_edge(std::uint32_t du, std::uint32_t dv);
double sc_edge(std::uint32_t du, std::uint32_t dv);
double abc_edge(std::uint32_t du, std::uint32_t dv);
double abs_edge(std::uint32_t du, std::uint32_t dv);

// abs_edge(x, y) - abc_edge(x, y) on the domain y >= x >= 1, y >= 2.
double f(std::uint32_t x, std::uint32_t y);

struct IndexReport {
    double randic = 0.0;
    double sum_connectivity = 0.0;
    double abc = 0.0;
    double abs = 0.0;
    double theta = 0.0;  // abc - abs
};

// Degree pair of an edge, normalised to first <= second.
using DegreePair = std::pair<std::uint32_t, std::uint32_t>;

// Sums every index over the given edge degree pairs. The pairs are sorted in
// place first so that equal multisets give bit-identical results.
IndexReport report_from_degree_pairs(std::span<DegreePair> pairs);

// Same summation as report_from_degree_pairs restricted to ABC and ABS.
struct AbcAbs {
    double abc = 0.0;
    double abs = 0.0;
    double theta() const { return abc - abs; }
};
AbcAbs abc_abs_from_degree_pairs(std::span<DegreePair> pairs);

// Throws NotConnected on disconnected input.
IndexReport index_report(const Graph& g);

// ABC - ABS evaluated in 113-bit binary floating point.
ExtendedReal theta_extended(std::span<const DegreePair> pairs);
ExtendedReal theta_extended(const Graph& g);

enum class SignClass { Positive, Negative, ZeroWithinTol };

std::string to_string(SignClass c);

inline constexpr double kDefaultZeroTol = 1e-9;

// Throws std::invalid_argument for tol <= 0.
SignClass sign_class(double theta, double tol = kDefaultZeroTol);
inline SignClass sign_class(const IndexReport& r, double tol = kDefaultZeroTol) { return sign_class(r.theta, tol); }

}  // namespace topoidx
