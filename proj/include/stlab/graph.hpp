#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stlab {

/// Immutable simple undirected graph over vertex indices 0..n-1.
/// Adjacency is kept as multi-word bitset rows; all mutators return a new
/// value, so graphs are safe to share between concurrent workers.
class Graph {
  public:
    static constexpr int kMaxVertices = 4096;

    Graph() : n_(0), words_(0), edges_(0) {}
    static Graph empty(int n);
    /// Bulk constructor; duplicate pairs collapse, loops rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long edge_count() const { return edges_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    /// New graph with edge {u,v}; idempotent. Rejects loops and bad indices.
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<int> degree_sequence() const;  // descending
    int max_degree() const;
    int min_degree() const;

    /// Row as raw words, for bitset algorithms.
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

  private:
    int n_;
    int words_;
    long long edges_;
    std::vector<std::uint64_t> bits_;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    }
    void set_bit(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= (std::uint64_t{1} << (v & 63));
    }
    void clear_bit(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    }
    friend Graph disjoint_union(const Graph&, const Graph&);
    friend Graph join(const Graph&, const Graph&);
    friend Graph complement(const Graph&);
};

Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus all |V(g)|*|V(h)| cross edges.
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
/// Subgraph induced by the listed vertices, relabeled in list order.
Graph induced(const Graph& g, const std::vector<int>& verts);
/// Connected components as vertex sets (each sorted; sets ordered by minimum).
std::vector<std::vector<int>> components(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);

}  // namespace stlab
