#include "stlab/graph6.hpp"

namespace stlab {

// graph6: size bytes, then the upper triangle in column-major order
// (0,1),(0,2),(1,2),(0,3),... packed 6 bits per printable byte (+63).

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::length_error("graph6_encode: order too large");
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& text) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw Graph6Error(pos, "unexpected end of input");
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw Graph6Error(pos, "byte outside printable graph6 range");
        ++pos;
        return c;
    };
    int n;
    int c0 = next();
    if (c0 == 126) {
        int c1 = next();
        if (c1 == 126) throw Graph6Error(pos - 1, "8-byte size encoding unsupported");
        int c2 = next(), c3 = next();
        n = ((c1 - 63) << 12) | ((c2 - 63) << 6) | (c3 - 63);
    } else {
        n = c0 - 63;
    }
    if (n > Graph::kMaxVertices) throw Graph6Error(0, "order exceeds capacity cap");
    std::vector<std::pair<int, int>> edges;
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = next() - 63;
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) edges.emplace_back(u, v);
            --nbits;
        }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw Graph6Error(pos - 1, "nonzero padding bits");
    if (pos != text.size()) throw Graph6Error(pos, "trailing bytes");
    return Graph::from_edges(n, edges);
}

}  // namespace stlab
