#include "topoidx/graph6.hpp"

#include <vector>

namespace topoidx {

namespace {

constexpr int kOffset = 63;
constexpr std::size_t kMaxShortOrder = 62;
constexpr std::size_t kMaxLongOrder = 258047;

int decode_byte(char c, std::size_t pos) {
    const int v = static_cast<unsigned char>(c) - kOffset;
    if (v < 0 || v > 63) {
        throw Graph6Error("invalid graph6 character at offset " + std::to_string(pos));
    }
    return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 string");

    std::size_t pos = 0;
    std::size_t n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') throw Graph6Error("orders above 258047 are not supported");
        if (text.size() < 4) throw Graph6Error("truncated graph6 order header");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text[i], i);
        if (n <= kMaxShortOrder) throw Graph6Error("non-canonical long order header");
        pos = 4;
    } else {
        n = static_cast<std::size_t>(decode_byte(text[0], 0));
        pos = 1;
    }
    if (n == 0) throw Graph6Error("graph6 order must be at least 1");

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos < body) throw Graph6Error("truncated graph6 body");
    if (text.size() - pos > body) throw Graph6Error("trailing characters after graph6 body");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int chunk = decode_byte(text[pos + k / 6], pos + k / 6);
            if (chunk & (1 << (5 - k % 6))) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = decode_byte(text[pos + body - 1], pos + body - 1);
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (last & pad_mask) throw Graph6Error("padding bit set beyond the adjacency triangle");
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxLongOrder) throw Graph6Error("order too large for graph6");
    std::string out;
    if (n <= kMaxShortOrder) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((n & 63) + kOffset));
    }
    const std::size_t bits = n * (n - 1) / 2;
    std::vector<unsigned char> chunks((bits + 5) / 6, 0);
    for (auto [u, v] : g.edges()) {
        const std::size_t k = static_cast<std::size_t>(v) * (v - 1) / 2 + u;
        chunks[k / 6] |= static_cast<unsigned char>(1 << (5 - k % 6));
    }
    for (auto c : chunks) out.push_back(static_cast<char>(c + kOffset));
    return out;
}

}  // namespace topoidx
