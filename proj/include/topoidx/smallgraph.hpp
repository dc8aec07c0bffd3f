#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "topoidx/graph.hpp"

namespace topoidx {

inline constexpr std::size_t kMaxInternalOrder = 7;

enum class UniverseSource { Internal, External };

struct GraphUniverse {
    std::string description;
    UniverseSource source = UniverseSource::Internal;
    std::optional<std::size_t> order;  // unset when orders are mixed
    std::vector<Graph> graphs;

    std::size_t count() const { return graphs.size(); }
};

class UniverseError : public std::runtime_error {
public:
    UniverseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// One canonically labeled representative per isomorphism class of connected
// graphs of order n, in increasing canonical-key order. 1 <= n <= 7.
std::vector<Graph> enumerate_connected(std::size_t n, int workers = 1);

// All connected graphs with min_order <= n <= max_order, ordered by n.
GraphUniverse connected_universe(std::size_t min_order, std::size_t max_order, int workers = 1);

// graph6 lines; blank lines and lines starting with '#' are skipped. Every
// graph must be connected and, when expect_order is given, of that order.
GraphUniverse load_universe(std::istream& in, std::optional<std::size_t> expect_order = std::nullopt,
                            std::string description = "stream");
GraphUniverse load_universe(const std::filesystem::path& path, std::optional<std::size_t> expect_order = std::nullopt);

}  // namespace topoidx
