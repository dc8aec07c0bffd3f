#pragma once

#include <string>
#include <string_view>

#include "topoidx/graph.hpp"

namespace topoidx {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph6: order header (n + 63, or '~' followed by 18 bits for n >= 63),
// then the upper triangle in column-major order packed six bits per byte,
// most significant bit first, each byte offset by 63.
// An optional ">>graph6<<" prefix and a trailing '\r' are accepted.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace topoidx
