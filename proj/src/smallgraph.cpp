#include "topoidx/smallgraph.hpp"

#include <fstream>
#include <istream>

#include "topoidx/canonical.hpp"
#include "topoidx/graph6.hpp"
#include "topoidx/kernels.hpp"

namespace topoidx {

std::vector<Graph> enumerate_connected(std::size_t n, int workers) {
    if (n < 1 || n > kMaxInternalOrder) {
        throw std::out_of_range("internal enumeration supports 1 <= n <= " + std::to_string(kMaxInternalOrder));
    }
    const auto keys = workers > 1 ? kernels::connected_keys_omp(n, workers) : kernels::connected_keys_serial(n);
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(graph_from_key(k));
    return out;
}

GraphUniverse connected_universe(std::size_t min_order, std::size_t max_order, int workers) {
    if (min_order < 1 || min_order > max_order) throw std::out_of_range("empty order range");
    GraphUniverse u;
    u.description = "connected graphs of order " + std::to_string(min_order) + ".." + std::to_string(max_order);
    if (min_order == max_order) u.order = min_order;
    for (std::size_t n = min_order; n <= max_order; ++n) {
        auto part = enumerate_connected(n, workers);
        u.graphs.insert(u.graphs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return u;
}

GraphUniverse load_universe(std::istream& in, std::optional<std::size_t> expect_order, std::string description) {
    GraphUniverse u;
    u.description = std::move(description);
    u.source = UniverseSource::External;
    u.order = expect_order;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        Graph g = [&] {
            try {
                return parse_graph6(line);
            } catch (const std::exception& e) {
                throw UniverseError(e.what(), lineno);
            }
        }();
        if (expect_order && g.order() != *expect_order) {
            throw UniverseError("order " + std::to_string(g.order()) + " does not match expected " +
                                    std::to_string(*expect_order),
                                lineno);
        }
        if (!is_connected(g)) throw UniverseError("graph is not connected", lineno);
        u.graphs.push_back(std::move(g));
    }
    return u;
}

GraphUniverse load_universe(const std::filesystem::path& path, std::optional<std::size_t> expect_order) {
    std::ifstream in(path);
    if (!in) throw UniverseError("cannot open " + path.string(), 0);
    return load_universe(in, expect_order, path.string());
}

}  // namespace topoidx
