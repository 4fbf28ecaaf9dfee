#include "stlab/enumerate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "stlab/canonical.hpp"
#include "stlab/forbidden.hpp"
#include "stlab/graph6.hpp"
#include "stlab/poly.hpp"
#include "stlab/spectral.hpp"

namespace stlab {

namespace {

std::vector<Graph> gen_all_counted(int n, const std::function<bool(const Graph&)>& filter,
                                   long long* visited) {
    if (n < 1 || n > 9) throw std::out_of_range("gen_all supports 1 <= n <= 9");
    std::vector<Graph> level;
    {
        Graph one = Graph::empty(1);
        if (!filter || filter(one)) level.push_back(one);
        if (visited) (*visited)++;
    }
    for (int m = 2; m <= n; ++m) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& g : level) {
            for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                std::vector<std::pair<int, int>> edges;
                for (int u = 0; u < m - 1; ++u) {
                    for (int v : g.neighbors(u))
                        if (v > u) edges.emplace_back(u, v);
                    if (mask & (1u << u)) edges.emplace_back(u, m - 1);
                }
                Graph child = Graph::from_edges(m, edges);
                if (visited) (*visited)++;
                if (filter && !filter(child)) continue;
                CanonicalForm cf = canonical_form(child);
                if (seen.insert(cf.key()).second) next.push_back(canonical_graph(child));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

std::vector<Graph> gen_all(int n, const std::function<bool(const Graph&)>& filter) {
    return gen_all_counted(n, filter, nullptr);
}

ScanResult extremal_edge_scan(const LinearForest& f, int n) {
    ScanResult res;
    res.n = n;
    res.objective = "edges";
    auto free_of = [&](const Graph& g) {
        ForestResult r = contains_linear_forest(g, f);
        if (r.status == Ternary::Unknown) throw std::runtime_error("containment budget exceeded in scan");
        return r.status == Ternary::Absent;
    };
    std::vector<Graph> all = gen_all_counted(n, free_of, &res.visited);
    res.feasible = static_cast<long long>(all.size());
    long long best = -1;
    for (const Graph& g : all) {
        if (g.edge_count() > best) {
            best = g.edge_count();
            res.argmax.clear();
        }
        if (g.edge_count() == best) res.argmax.push_back(graph6_encode(g));
    }
    res.best = static_cast<double>(best);
    std::sort(res.argmax.begin(), res.argmax.end());
    return res;
}

ScanResult extremal_q_scan(const LinearForest& f, int n, double tol) {
    ScanResult res;
    res.n = n;
    res.objective = "qmax";
    auto free_of = [&](const Graph& g) {
        ForestResult r = contains_linear_forest(g, f);
        if (r.status == Ternary::Unknown) throw std::runtime_error("containment budget exceeded in scan");
        return r.status == Ternary::Absent;
    };
    std::vector<Graph> all = gen_all_counted(n, free_of, &res.visited);
    res.feasible = static_cast<long long>(all.size());
    std::vector<SpectralEnclosure> enc;
    double best_lower = 0.0;
    for (const Graph& g : all) {
        enc.push_back(q_max(g));
        best_lower = std::max(best_lower, enc.back().lower);
    }
    // Exact roots for everything that could still be on top.
    std::vector<size_t> cand;
    for (size_t i = 0; i < all.size(); ++i)
        if (enc[i].upper >= best_lower - tol) cand.push_back(i);
    std::vector<ExactRoot> roots;
    roots.reserve(cand.size());
    for (size_t i : cand) roots.push_back(q_exact_graph(all[i]));
    std::vector<size_t> top;
    for (size_t i = 0; i < cand.size(); ++i) {
        if (top.empty()) {
            top.push_back(i);
            continue;
        }
        Order o = compare_exact_roots(roots[i], roots[top.front()]);
        if (o == Order::Greater) {
            top.clear();
            top.push_back(i);
        } else if (o == Order::Undecided) {
            // Equal q (valid tie: cospectral or same exact root) or refinement
            // exhausted; the latter is flagged, never silently broken.
            bool same_poly = roots[i].poly.c == roots[top.front()].poly.c;
            bool same_rational = roots[i].exact() && roots[top.front()].exact() &&
                                 roots[i].lo == roots[top.front()].lo;
            if (!same_poly && !same_rational) res.undecided_tie = true;
            top.push_back(i);
        }
    }
    for (size_t i : top) res.argmax.push_back(graph6_encode(all[cand[i]]));
    std::sort(res.argmax.begin(), res.argmax.end());
    if (!top.empty()) {
        refine_root(roots[top.front()], BigRat(1, 1000000000));
        res.best = roots[top.front()].approx();
    }
    return res;
}

std::vector<Graph> sample_graphs(int n, long long edge_min, int count, std::uint64_t seed) {
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (edge_min < 0 || edge_min > max_edges) throw std::invalid_argument("edge_min out of range");
    std::mt19937_64 rng(seed);
    auto draw = [&rng](std::uint64_t bound) {  // uniform in [0, bound)
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = rng();
        } while (x >= limit);
        return x % bound;
    };
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    std::vector<Graph> out;
    out.reserve(count);
    long long hi = std::min(edge_min + n, max_edges);
    for (int t = 0; t < count; ++t) {
        long long m = edge_min + static_cast<long long>(draw(hi - edge_min + 1));
        // Partial Fisher–Yates: first m entries become the edge set.
        for (long long i = 0; i < m; ++i) {
            long long j = i + static_cast<long long>(draw(all_edges.size() - i));
            std::swap(all_edges[i], all_edges[j]);
        }
        out.push_back(Graph::from_edges(
            n, std::vector<std::pair<int, int>>(all_edges.begin(), all_edges.begin() + m)));
    }
    return out;
}

}  // namespace stlab
