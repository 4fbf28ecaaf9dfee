#include "stlab/canonical.hpp"

#include <algorithm>
#include <map>

namespace stlab {

namespace {

// Iterated neighbor-color refinement; returns per-vertex color ids where the
// color order itself is isomorphism-invariant (colors sorted by signature).
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    // normalize to dense ids in degree order
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> buckets;
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            for (int w : g.neighbors(v)) sig.push_back(color[w]);
            std::sort(sig.begin(), sig.end());
            buckets[{color[v], std::move(sig)}].push_back(v);
        }
        std::vector<int> next(n);
        int id = 0;
        for (auto& [sig, verts] : buckets) {
            for (int v : verts) next[v] = id;
            ++id;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct Canonicalizer {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> classes;  // vertices per color, invariant order
    std::vector<int> class_of_position;     // which class fills position j
    std::vector<int> perm;                  // perm[j] = original vertex at position j
    std::vector<char> used;
    size_t total_bits;
    std::vector<std::uint8_t> cur, best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit Canonicalizer(const Graph& graph) : g(graph), n(graph.order()) {
        std::vector<int> color = refine_colors(g);
        int nc = 0;
        for (int v = 0; v < n; ++v) nc = std::max(nc, color[v] + 1);
        classes.assign(nc, {});
        for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
        for (int c = 0; c < nc; ++c)
            for (size_t i = 0; i < classes[c].size(); ++i) class_of_position.push_back(c);
        perm.assign(n, -1);
        used.assign(n, 0);
        total_bits = static_cast<size_t>(n) * (n - 1) / 2;
        cur.assign(total_bits, 0);
    }

    // Bits contributed by position j: adjacency to positions 0..j-1,
    // matching graph6 column-major order.
    size_t column_offset(int j) const { return static_cast<size_t>(j) * (j - 1) / 2; }

    void run() {
        place(0, true);
        if (!have_best) {  // n <= 1: empty string
            best.assign(total_bits, 0);
            best_perm.assign(n, 0);
            for (int v = 0; v < n; ++v) best_perm[v] = v;
            have_best = true;
        }
    }

    void place(int j, bool tight) {
        if (j == n) {
            // best may have improved below an ancestor that was entered with a
            // stale comparison, so always compare in full before replacing.
            if (!have_best || (!tight && cur < best)) {
                best = cur;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        const size_t off = column_offset(j);
        for (int v : classes[class_of_position[j]]) {
            if (used[v]) continue;
            // write column j
            int cmp = 0;  // -1 less than best, 0 equal, +1 greater
            for (int i = 0; i < j; ++i) {
                std::uint8_t b = g.has_edge(perm[i], v) ? 1 : 0;
                cur[off + i] = b;
                if (tight && have_best && cmp == 0) {
                    if (b < best[off + i])
                        cmp = -1;
                    else if (b > best[off + i])
                        cmp = 1;
                }
            }
            if (tight && have_best && cmp > 0) continue;
            used[v] = 1;
            perm[j] = v;
            place(j + 1, tight && have_best && cmp == 0);
            used[v] = 0;
        }
    }
};

}  // namespace

std::string CanonicalForm::key() const {
    std::string s;
    s.push_back(static_cast<char>(n & 0xff));
    s.push_back(static_cast<char>((n >> 8) & 0xff));
    int acc = 0, nb = 0;
    for (std::uint8_t b : bits) {
        acc = (acc << 1) | b;
        if (++nb == 8) {
            s.push_back(static_cast<char>(acc));
            acc = 0;
            nb = 0;
        }
    }
    if (nb) s.push_back(static_cast<char>(acc << (8 - nb)));
    return s;
}

CanonicalForm canonical_form(const Graph& g) {
    Canonicalizer c(g);
    c.run();
    return CanonicalForm{g.order(), std::move(c.best)};
}

Graph canonical_graph(const Graph& g) {
    Canonicalizer c(g);
    c.run();
    std::vector<int> pos(g.order());
    for (int j = 0; j < g.order(); ++j) pos[c.best_perm[j]] = j;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(pos[u], pos[v]);
    return Graph::from_edges(g.order(), edges);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace stlab
