#include "stlab/forbidden.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace stlab {

bool Embedding::verify(const Graph& g, const LinearForest& f) const {
    if (paths.size() != f.orders().size()) return false;
    std::vector<char> used(g.order(), 0);
    for (size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        if (static_cast<int>(p.size()) != f.orders()[i]) return false;
        for (int v : p) {
            if (v < 0 || v >= g.order() || used[v]) return false;
            used[v] = 1;
        }
        for (size_t j = 0; j + 1 < p.size(); ++j)
            if (!g.has_edge(p[j], p[j + 1])) return false;
    }
    return true;
}

bool erdos_gallai_guarantee(long long n, long long e, int l) {
    if (l < 2) throw std::invalid_argument("erdos_gallai_guarantee requires l >= 2");
    return 2 * e > static_cast<long long>(l - 2) * n;
}

namespace {

// Galil's O(V^3) blossom algorithm for maximum matching in a general graph.
struct Blossom {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> blossom_mark, in_queue;

    explicit Blossom(const Graph& g) : n(g.order()), adj(n), match(n, -1) {
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[v].push_back(w);
    }

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom_mark[base[v]] = 1;
            blossom_mark[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting(int root) {
        parent.assign(n, -1);
        in_queue.assign(n, 0);
        base.resize(n);
        std::iota(base.begin(), base.end(), 0);
        std::queue<int> q;
        q.push(root);
        in_queue[root] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (base[v] == base[w] || match[v] == w) continue;
                if (w == root || (match[w] != -1 && parent[match[w]] != -1)) {
                    int b = lca(v, w);
                    blossom_mark.assign(n, 0);
                    mark_path(v, b, w);
                    mark_path(w, b, v);
                    for (int u = 0; u < n; ++u)
                        if (blossom_mark[base[u]]) {
                            base[u] = b;
                            if (!in_queue[u]) {
                                in_queue[u] = 1;
                                q.push(u);
                            }
                        }
                } else if (parent[w] == -1) {
                    parent[w] = v;
                    if (match[w] == -1) return w;
                    in_queue[match[w]] = 1;
                    q.push(match[w]);
                }
            }
        }
        return -1;
    }

    void solve() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int w = find_augmenting(v);
            while (w != -1) {
                int pw = parent[w], next = match[pw];
                match[w] = pw;
                match[pw] = w;
                w = next;
            }
        }
    }
};

struct ForestSearch {
    const Graph& g;
    std::vector<int> long_paths;  // orders >= 3, descending
    int p2_count = 0;
    std::vector<char> used;
    std::vector<int> order;  // vertices by descending degree
    long long budget;
    Embedding emb;
    Ternary verdict = Ternary::Absent;

    ForestSearch(const Graph& gr, const LinearForest& f, long long node_budget)
        : g(gr), used(gr.order(), 0), budget(node_budget) {
        for (int a : f.orders()) {
            if (a >= 3)
                long_paths.push_back(a);
            else
                ++p2_count;
        }
        order.resize(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        emb.paths.resize(long_paths.size());
    }

    bool finish_with_matching() {
        if (p2_count == 0) return true;
        std::vector<int> rest;
        for (int v = 0; v < g.order(); ++v)
            if (!used[v]) rest.push_back(v);
        Graph residue = induced(g, rest);
        Blossom bl(residue);
        bl.solve();
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < residue.order(); ++v)
            if (bl.match[v] > v) edges.emplace_back(rest[v], rest[bl.match[v]]);
        if (static_cast<int>(edges.size()) < p2_count) return false;
        for (int i = 0; i < p2_count; ++i)
            emb.paths.push_back({edges[i].first, edges[i].second});
        return true;
    }

    // Extend path `pi` whose image so far ends at `tail` with `left` more vertices.
    bool extend(size_t pi, int tail, int left) {
        if (--budget < 0) {
            verdict = Ternary::Unknown;
            return false;
        }
        if (left == 0) return place(pi + 1);
        for (int w : g.neighbors(tail)) {
            if (used[w]) continue;
            used[w] = 1;
            emb.paths[pi].push_back(w);
            if (extend(pi, w, left - 1)) return true;
            emb.paths[pi].pop_back();
            used[w] = 0;
            if (verdict == Ternary::Unknown) return false;
        }
        return false;
    }

    bool place(size_t pi) {
        if (pi == long_paths.size()) return finish_with_matching();
        int len = long_paths[pi];
        for (int v : order) {
            if (used[v]) continue;
            // A path interior needs degree >= 2; endpoints >= 1.
            if (g.degree(v) == 0) continue;
            used[v] = 1;
            emb.paths[pi] = {v};
            if (extend(pi, v, len - 1)) return true;
            used[v] = 0;
            if (verdict == Ternary::Unknown) return false;
        }
        emb.paths[pi].clear();
        return false;
    }

    ForestResult run(const LinearForest& f) {
        ForestResult out;
        if (f.total_order() > g.order()) {
            out.status = Ternary::Absent;
            return out;
        }
        if (place(0)) {
            // run() embeds long paths first then P_2's; restore spec order
            // (descending) — forest orders are already descending with the
            // 2's at the end, so emb.paths is in the right order already.
            out.status = Ternary::Present;
            out.embedding = emb;
            if (!out.embedding->verify(g, f)) throw std::logic_error("invalid embedding produced");
            return out;
        }
        out.status = verdict;
        return out;
    }
};

// Does g minus the vertices marked in `removed` admit a P_3-hitting set of
// size <= budget? Three-way branching on the vertices of any found P_3.
bool p3_hitting_set(const Graph& g, std::vector<char>& removed, int budget) {
    int center = -1, a = -1, b = -1;
    for (int c = 0; c < g.order() && center == -1; ++c) {
        if (removed[c]) continue;
        int first = -1;
        for (int w : g.neighbors(c)) {
            if (removed[w]) continue;
            if (first == -1) {
                first = w;
            } else {
                center = c;
                a = first;
                b = w;
                break;
            }
        }
    }
    if (center == -1) return true;  // P_3-free already
    if (budget == 0) return false;
    for (int v : {center, a, b}) {
        removed[v] = 1;
        bool ok = p3_hitting_set(g, removed, budget - 1);
        removed[v] = 0;
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    Blossom bl(g);
    bl.solve();
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.order(); ++v)
        if (bl.match[v] > v) out.emplace_back(v, bl.match[v]);
    return out;
}

ForestResult contains_linear_forest(const Graph& g, const LinearForest& f,
                                    long long node_budget) {
    ForestSearch search(g, f, node_budget);
    return search.run(f);
}

ForestResult contains_k_p3(const Graph& g, int k, long long node_budget) {
    if (k < 1) throw std::invalid_argument("contains_k_p3 requires k >= 1");
    LinearForest f(std::vector<int>(k, 3));
    if (3 * k > g.order()) {
        ForestResult out;
        out.status = Ternary::Absent;
        return out;
    }
    // Greedy packing over a few deterministic vertex orders: repeatedly grab
    // a P_3 centered at the next available vertex of degree >= 2.
    std::vector<int> base(g.order());
    std::iota(base.begin(), base.end(), 0);
    for (int pass = 0; pass < 3; ++pass) {
        std::vector<int> ord = base;
        if (pass == 1)
            std::stable_sort(ord.begin(), ord.end(),
                             [&](int a, int b) { return g.degree(a) < g.degree(b); });
        else if (pass == 2)
            std::stable_sort(ord.begin(), ord.end(),
                             [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<char> used(g.order(), 0);
        Embedding emb;
        for (int c : ord) {
            if (static_cast<int>(emb.paths.size()) == k) break;
            if (used[c]) continue;
            int a = -1, b = -1;
            for (int w : g.neighbors(c)) {
                if (used[w]) continue;
                if (a == -1)
                    a = w;
                else {
                    b = w;
                    break;
                }
            }
            if (b == -1) continue;
            used[a] = used[b] = used[c] = 1;
            emb.paths.push_back({a, c, b});
        }
        if (static_cast<int>(emb.paths.size()) == k) {
            ForestResult out;
            out.status = Ternary::Present;
            out.embedding = std::move(emb);
            if (!out.embedding->verify(g, f)) throw std::logic_error("invalid embedding produced");
            return out;
        }
    }
    // Absence certificate: a P_3-hitting set of size <= k - 1 bounds any
    // vertex-disjoint packing by k - 1 paths, since each packed path must
    // use a distinct hitter.
    {
        std::vector<char> removed(g.order(), 0);
        if (p3_hitting_set(g, removed, k - 1)) {
            ForestResult out;
            out.status = Ternary::Absent;
            return out;
        }
    }
    return contains_linear_forest(g, f, node_budget);
}

}  // namespace stlab
