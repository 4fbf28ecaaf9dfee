#include "stlab/graph.hpp"

#include <algorithm>
#include <bit>

namespace stlab {

Graph Graph::empty(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices) throw std::length_error("vertex count exceeds capacity cap");
    Graph g;
    g.n_ = n;
    g.words_ = n == 0 ? 0 : (n + 63) / 64;
    g.bits_.assign(static_cast<size_t>(n) * g.words_, 0);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if ((g.bits_[static_cast<size_t>(u) * g.words_ + (v >> 6)] >> (v & 63)) & 1u) continue;
        g.set_bit(u, v);
        g.set_bit(v, u);
        ++g.edges_;
    }
    return g;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (has_edge(u, v)) return *this;
    Graph g = *this;
    g.set_bit(u, v);
    g.set_bit(v, u);
    ++g.edges_;
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) return *this;
    Graph g = *this;
    g.clear_bit(u, v);
    g.clear_bit(v, u);
    --g.edges_;
    return g;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int i = 0; i < words_; ++i) d += std::popcount(r[i]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int i = 0; i < words_; ++i) {
        std::uint64_t w = r[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

int Graph::max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int m = n_;
    for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out = Graph::empty(g.order() + h.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) {
                out.set_bit(u, v);
                out.set_bit(v, u);
            }
    const int off = g.order();
    for (int u = 0; u < h.order(); ++u)
        for (int v : h.neighbors(u))
            if (u < v) {
                out.set_bit(off + u, off + v);
                out.set_bit(off + v, off + u);
            }
    out.edges_ = g.edge_count() + h.edge_count();
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    const int off = g.order();
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) {
            out.set_bit(u, off + v);
            out.set_bit(off + v, u);
        }
    out.edges_ += static_cast<long long>(g.order()) * h.order();
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out = Graph::empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) {
                out.set_bit(u, v);
                out.set_bit(v, u);
                ++out.edges_;
            }
    return out;
}

Graph induced(const Graph& g, const std::vector<int>& verts) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(verts.size()), edges);
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

}  // namespace stlab
