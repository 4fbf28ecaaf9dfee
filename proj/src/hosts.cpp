#include "stlab/hosts.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "stlab/forbidden.hpp"

namespace stlab {

namespace {

std::optional<std::pair<int, int>> find_edge_avoiding(const Graph& g, const std::vector<char>& removed,
                                                      std::optional<std::pair<int, int>> skip) {
    for (int u = 0; u < g.order(); ++u) {
        if (removed[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v <= u || removed[v]) continue;
            if (skip && skip->first == u && skip->second == v) continue;
            return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

bool cover_search(const Graph& g, std::vector<char>& removed, int depth, std::vector<int>& cover) {
    auto e = find_edge_avoiding(g, removed, std::nullopt);
    if (!e) return true;
    if (depth == 0) return false;
    for (int v : {e->first, e->second}) {
        removed[v] = 1;
        cover.push_back(v);
        if (cover_search(g, removed, depth - 1, cover)) return true;
        cover.pop_back();
        removed[v] = 0;
    }
    return false;
}

bool splus_search(const Graph& g, std::vector<char>& removed, int depth, SPlusWitness& w) {
    auto e = find_edge_avoiding(g, removed, w.extra_edge);
    if (!e) return true;
    if (depth > 0) {
        for (int v : {e->first, e->second}) {
            removed[v] = 1;
            w.cover.push_back(v);
            if (splus_search(g, removed, depth - 1, w)) return true;
            w.cover.pop_back();
            removed[v] = 0;
        }
    }
    if (!w.extra_edge) {
        w.extra_edge = *e;
        if (splus_search(g, removed, depth, w)) return true;
        w.extra_edge.reset();
    }
    return false;
}

// A vertex of degree >= 2 in G - removed, with two surviving neighbors.
std::optional<std::array<int, 3>> find_p3(const Graph& g, const std::vector<char>& removed) {
    for (int c = 0; c < g.order(); ++c) {
        if (removed[c]) continue;
        int a = -1;
        for (int w : g.neighbors(c)) {
            if (removed[w]) continue;
            if (a == -1)
                a = w;
            else
                return std::array<int, 3>{a, c, w};
        }
    }
    return std::nullopt;
}

bool f_search(const Graph& g, std::vector<char>& removed, int depth, std::vector<int>& cover) {
    auto p = find_p3(g, removed);
    if (!p) return true;
    if (depth == 0) return false;
    for (int v : *p) {
        removed[v] = 1;
        cover.push_back(v);
        if (f_search(g, removed, depth - 1, cover)) return true;
        cover.pop_back();
        removed[v] = 0;
    }
    return false;
}

// Injection of `pattern` into `host` preserving edges.
bool subgraph_injection(const Graph& pattern, const Graph& host, std::vector<int>& image) {
    const int np = pattern.order(), nh = host.order();
    if (np > nh) return false;
    image.assign(np, -1);
    std::vector<char> taken(nh, 0);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == np) return true;
        for (int t = 0; t < nh; ++t) {
            if (taken[t]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pattern.has_edge(i, j) && !host.has_edge(t, image[j])) ok = false;
            if (!ok) continue;
            image[i] = t;
            taken[t] = 1;
            if (go(i + 1)) return true;
            taken[t] = 0;
            image[i] = -1;
        }
        return false;
    };
    return go(0);
}

// Pack component orders (items) into t1 bins of capacity h and t2 of h+1.
bool pack_bins(std::vector<int> items, int t1, int t2, int h, std::vector<int>* assignment) {
    std::vector<int> cap;
    for (int i = 0; i < t1; ++i) cap.push_back(h);
    for (int i = 0; i < t2; ++i) cap.push_back(h + 1);
    std::vector<int> idx(items.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return items[a] > items[b]; });
    std::vector<int> bin_of(items.size(), -1);
    std::function<bool(size_t)> go = [&](size_t pos) -> bool {
        if (pos == idx.size()) return true;
        int item = items[idx[pos]];
        if (item == 1) {
            // Singletons only need leftover space somewhere.
            long long left = 0;
            for (int c : cap) left += c;
            long long need = 0;
            for (size_t q = pos; q < idx.size(); ++q) need += items[idx[q]];
            if (need > left) return false;
            int b = 0;
            for (size_t q = pos; q < idx.size(); ++q) {
                while (cap[b] == 0) ++b;
                cap[b]--;
                bin_of[idx[q]] = b;
            }
            return true;
        }
        int last_cap = -1;
        for (size_t b = 0; b < cap.size(); ++b) {
            if (cap[b] < item || cap[b] == last_cap) continue;
            last_cap = cap[b];
            cap[b] -= item;
            bin_of[idx[pos]] = b;
            if (go(pos + 1)) return true;
            cap[b] += item;
            bin_of[idx[pos]] = -1;
        }
        return false;
    };
    if (!go(0)) return false;
    if (assignment) *assignment = bin_of;
    return true;
}

void next_combination_done(std::vector<int>& c, int n, bool& done) {
    int r = static_cast<int>(c.size());
    int i = r - 1;
    while (i >= 0 && c[i] == n - r + i) --i;
    if (i < 0) {
        done = true;
        return;
    }
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
}

}  // namespace

std::optional<std::vector<int>> embeds_in_S(const Graph& g, int h) {
    if (h < 0) throw std::invalid_argument("embeds_in_S requires h >= 0");
    std::vector<char> removed(g.order(), 0);
    std::vector<int> cover;
    if (cover_search(g, removed, h, cover)) return cover;
    return std::nullopt;
}

std::optional<SPlusWitness> embeds_in_S_plus(const Graph& g, int h) {
    if (h < 0) throw std::invalid_argument("embeds_in_S_plus requires h >= 0");
    std::vector<char> removed(g.order(), 0);
    SPlusWitness w;
    if (splus_search(g, removed, h, w)) return w;
    return std::nullopt;
}

std::optional<std::vector<int>> embeds_in_F(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("embeds_in_F requires k >= 1");
    std::vector<char> removed(g.order(), 0);
    std::vector<int> cover;
    if (f_search(g, removed, k - 1, cover)) return cover;
    return std::nullopt;
}

std::optional<FAttachWitness> embeds_in_F_attach(const Graph& g, int k, const std::string& h_name) {
    if (k < 2) throw std::invalid_argument("embeds_in_F_attach requires k >= 2");
    Graph att = attachment_graph(h_name);
    const int n = g.order(), r = std::min(k - 2, n);
    const int pairs = std::max(0, (n - (k - 2) - att.order())) / 2;

    auto try_cover = [&](const std::vector<int>& cov) -> std::optional<FAttachWitness> {
        std::vector<char> in_cov(n, 0);
        for (int v : cov) in_cov[v] = 1;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_cov[v]) rest.push_back(v);
        Graph sub = induced(g, rest);
        std::vector<int> to_h;  // local indices that must map into the attachment
        int m2 = 0;
        std::vector<std::vector<int>> k2s;
        for (const auto& comp : components(sub)) {
            if (comp.size() >= 3) {
                to_h.insert(to_h.end(), comp.begin(), comp.end());
            } else if (comp.size() == 2) {
                ++m2;
                k2s.push_back(comp);
            }
        }
        for (int i = 0; i < m2 - pairs; ++i)
            to_h.insert(to_h.end(), k2s[i].begin(), k2s[i].end());
        if (static_cast<int>(to_h.size()) > att.order()) return std::nullopt;
        Graph pattern = induced(sub, to_h);
        std::vector<int> image;
        if (!subgraph_injection(pattern, att, image)) return std::nullopt;
        FAttachWitness w;
        w.cover = cov;
        for (int loc : to_h) w.into_h.push_back(rest[loc]);
        w.h_image = image;
        return w;
    };

    if (r == 0) return try_cover({});
    std::vector<int> comb(r);
    std::iota(comb.begin(), comb.end(), 0);
    bool done = false;
    while (!done) {
        if (auto w = try_cover(comb)) return w;
        next_combination_done(comb, n, done);
    }
    return std::nullopt;
}

std::optional<LWitness> embeds_in_L(const Graph& g, int t1, int t2, int h) {
    if (t1 < 0 || t2 < 0 || h < 1) throw std::invalid_argument("bad L parameters");
    if (g.order() > t1 * h + t2 * (h + 1) + 1) return std::nullopt;
    auto try_without = [&](int apex) -> std::optional<LWitness> {
        std::vector<int> rest;
        for (int v = 0; v < g.order(); ++v)
            if (v != apex) rest.push_back(v);
        Graph sub = induced(g, rest);
        std::vector<int> items;
        for (const auto& comp : components(sub)) items.push_back(static_cast<int>(comp.size()));
        LWitness w;
        w.apex = apex;
        if (pack_bins(items, t1, t2, h, &w.bin_of)) return w;
        return std::nullopt;
    };
    for (int apex = -1; apex < g.order(); ++apex)
        if (auto w = try_without(apex)) return w;
    return std::nullopt;
}

std::optional<Hn1Witness> embeds_in_Hn1(const Graph& g) {
    const int n = g.order();
    if (n < 7) return std::nullopt;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            // Edges avoiding both u and v: at most one, and its endpoints
            // must not be neighbors of v (the private pair is nonadjacent
            // to v in the host).
            std::optional<std::pair<int, int>> extra;
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) {
                if (a == u || a == v) continue;
                for (int b : g.neighbors(a)) {
                    if (b <= a || b == u || b == v) continue;
                    if (extra || g.has_edge(v, a) || g.has_edge(v, b)) {
                        ok = false;
                        break;
                    }
                    extra = std::make_pair(a, b);
                }
            }
            // The secondary hub of the host has only n - 4 neighbors besides
            // the dominating vertex, so v cannot exceed that.
            if (ok) {
                int v_deg = 0;
                for (int b : g.neighbors(v))
                    if (b != u) ++v_deg;
                if (v_deg > n - 4) ok = false;
            }
            if (ok) {
                Hn1Witness w;
                w.u = u;
                w.v = v;
                w.extra_edge = extra;
                return w;
            }
        }
    }
    return std::nullopt;
}

std::vector<std::string> classify_2p3_free(const Graph& g) {
    if (g.order() < 6) throw std::invalid_argument("classification requires order >= 6");
    ForestResult two_p3 = contains_k_p3(g, 2);
    if (two_p3.status != Ternary::Absent)
        throw std::invalid_argument("graph is not 2*P3-free (or containment unknown)");
    std::vector<std::string> labels;
    if (embeds_in_F(g, 2)) labels.push_back("F(k=2)");
    for (const char* name : {"K4", "K5", "N6"})
        if (embeds_in_F_attach(g, 2, name))
            labels.push_back(std::string("Fatt(") + name + ",k=2)");
    return labels;
}

}  // namespace stlab
