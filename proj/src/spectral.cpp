#include "stlab/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <optional>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stlab {

namespace {

// Enclosure for one connected component given as a vertex list.
SpectralEnclosure q_max_component(const Graph& g, const std::vector<int>& comp,
                                  double tol, long long max_iter) {
    const int m = static_cast<int>(comp.size());
    if (m == 1) return SpectralEnclosure{0.0, 0.0, 0, true};
    std::vector<int> idx(g.order(), -1);
    for (int i = 0; i < m; ++i) idx[comp[i]] = i;
    std::vector<std::vector<int>> adj(m);
    std::vector<double> deg(m);
    for (int i = 0; i < m; ++i) {
        for (int w : g.neighbors(comp[i])) adj[i].push_back(idx[w]);
        deg[i] = static_cast<double>(adj[i].size());
    }
    std::vector<double> x(m), y(m);
    double norm = 0;
    for (int i = 0; i < m; ++i) {
        x[i] = deg[i] + 1.0;
        norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (auto& v : x) v /= norm;

    SpectralEnclosure enc;
    enc.lower = 0.0;
    enc.upper = 2.0 * (m - 1) + 1.0;
    enc.converged = false;
    // Floating-point slack: dot products of length m at magnitude ~q.
    const double scale = 2.0 * g.max_degree() + 1.0;
    const double margin = 16.0 * DBL_EPSILON * m * scale;
    const double eff_tol = std::max(tol, 4.0 * margin);

    for (long long it = 0; it < max_iter; ++it) {
        double rayleigh = 0, cw = 0, ynorm = 0;
        for (int i = 0; i < m; ++i) {
            double s = deg[i] * x[i];
            for (int j : adj[i]) s += x[j];
            y[i] = s;
            rayleigh += x[i] * s;
            cw = std::max(cw, s / x[i]);
            ynorm += s * s;
        }
        enc.lower = std::max(enc.lower, rayleigh - margin);
        enc.upper = std::min(enc.upper, cw + margin);
        enc.iterations = it + 1;
        if (enc.upper - enc.lower <= eff_tol) {
            enc.converged = true;
            break;
        }
        ynorm = std::sqrt(ynorm);
        for (int i = 0; i < m; ++i) x[i] = y[i] / ynorm;
    }
    return enc;
}

ExactRoot largest_root_of_component(const Graph& g, const std::vector<std::vector<int>>& cells,
                                    const std::vector<int>& comp) {
    std::vector<char> in_comp(g.order(), 0);
    for (int v : comp) in_comp[v] = 1;
    std::vector<std::vector<int>> local;
    std::vector<int> cell_of(g.order(), -1);
    for (const auto& cell : cells) {
        std::vector<int> restricted;
        for (int v : cell)
            if (in_comp[v]) restricted.push_back(v);
        if (!restricted.empty()) {
            for (int v : restricted) cell_of[v] = static_cast<int>(local.size());
            local.push_back(std::move(restricted));
        }
    }
    size_t covered = 0;
    for (const auto& c : local) covered += c.size();
    if (covered != comp.size()) throw std::logic_error("quotient cells do not partition the component");

    const int nc = static_cast<int>(local.size());
    std::vector<std::vector<BigInt>> b(nc, std::vector<BigInt>(nc, 0));
    for (int i = 0; i < nc; ++i) {
        bool first = true;
        std::vector<long long> counts(nc);
        for (int v : local[i]) {
            std::vector<long long> row(nc, 0);
            for (int w : g.neighbors(v)) row[cell_of[w]]++;
            if (first) {
                counts = row;
                first = false;
            } else if (row != counts) {
                throw std::logic_error("declared partition is not equitable");
            }
        }
        long long degree = 0;
        for (long long c : counts) degree += c;
        for (int j = 0; j < nc; ++j) b[i][j] = counts[j];
        b[i][i] += degree;
    }
    return isolate_largest_root(charpoly(b));
}

}  // namespace

SpectralEnclosure q_max(const Graph& g, double tol, long long max_iter) {
    if (g.order() < 1) throw std::invalid_argument("q_max requires at least one vertex");
    SpectralEnclosure best{0.0, 0.0, 0, true};
    for (const auto& comp : components(g)) {
        SpectralEnclosure e = q_max_component(g, comp, tol, max_iter);
        best.iterations += e.iterations;
        best.converged = best.converged && e.converged;
        if (e.upper > best.upper) {
            best.upper = e.upper;
            best.lower = std::max(best.lower, e.lower);
        }
        best.lower = std::max(best.lower, e.lower);
    }
    return best;
}

std::vector<std::vector<BigInt>> q_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<BigInt>> q(n, std::vector<BigInt>(n, 0));
    for (int v = 0; v < n; ++v) {
        q[v][v] = g.degree(v);
        for (int w : g.neighbors(v)) q[v][w] = 1;
    }
    return q;
}

IntPoly q_charpoly(const Graph& g) { return charpoly(q_matrix(g)); }

ExactRoot q_exact_graph(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("q of the empty graph is undefined");
    return isolate_largest_root(q_charpoly(g));
}

ExactRoot q_exact(const FamilySpec& spec) {
    Graph g = build(spec);
    if (g.order() == 0) throw std::invalid_argument("q of the empty graph is undefined");
    auto cells = quotient_cells(spec);
    std::optional<ExactRoot> best;
    for (const auto& comp : components(g)) {
        ExactRoot cand = largest_root_of_component(g, cells, comp);
        if (!best) {
            best = std::move(cand);
            continue;
        }
        if (cand.poly.c == best->poly.c && cand.lo == best->lo && cand.hi == best->hi) continue;
        if (compare_exact_roots(cand, *best) == Order::Greater) best = std::move(cand);
    }
    return *best;
}

double merris_bound(const Graph& g) {
    double best = 0.0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 0) continue;
        long long s = 0;
        for (int w : g.neighbors(v)) s += g.degree(w);
        best = std::max(best, d + static_cast<double>(s) / d);
    }
    return best;
}

long long edge_degree_bound(const Graph& g) {
    long long best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) best = std::max<long long>(best, g.degree(u) + g.degree(v));
    return best;
}

double size_order_bound(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("size_order_bound requires n >= 2");
    return 2.0 * g.edge_count() / (g.order() - 1) + g.order() - 2;
}

std::string CompareCertificate::text() const {
    std::ostringstream os;
    auto iv = [](const ExactRoot& r) {
        std::ostringstream s;
        s << "(" << r.lo << ", " << r.hi << "]";
        return s.str();
    };
    os << "order=";
    switch (order) {
        case Order::Less: os << "Less"; break;
        case Order::Greater: os << "Greater"; break;
        case Order::Undecided: os << "Undecided"; break;
    }
    os << " poly_a=" << a.poly.coeff_list() << " interval_a=" << iv(a)
       << " poly_b=" << b.poly.coeff_list() << " interval_b=" << iv(b);
    return os.str();
}

CompareCertificate certified_compare(const FamilySpec& a, const FamilySpec& b, int max_depth) {
    CompareCertificate cert;
    cert.a = q_exact(a);
    cert.b = q_exact(b);
    cert.order = compare_exact_roots(cert.a, cert.b, max_depth);
    return cert;
}

ChainResult lemma_bound_chain(int h, int n) {
    if (h < 1 || n <= h + 1) throw std::invalid_argument("lemma_bound_chain requires h >= 1, n > h + 1");
    ChainResult out;
    out.s_regime = n >= 7 * h * h;
    out.f_regime = n >= 2 * h * h;

    const BigRat wide(1, 1000000000);
    // S-side chain.
    if (n - h >= 2) {
        FamilySpec s = FamilySpec::make_S(n, h);
        FamilySpec sp = FamilySpec::make_S_plus(n, h);
        CompareCertificate cmp = certified_compare(sp, s);
        ExactRoot rs = q_exact(s);
        BigRat c1 = BigRat(n + 2 * h - 2) - BigRat(2 * (static_cast<long long>(h) * h - h), n + 2 * h - 3);
        BigRat c2 = BigRat(n + 2 * h - 3);
        out.s_chain_holds = (cmp.order == Order::Greater) && has_root_above(rs.poly, c1) && c1 > c2;
        ExactRoot rsp = q_exact(sp);
        refine_root(rsp, wide);
        refine_root(rs, wide);
        out.q_s_plus = rsp.approx();
        out.q_s = rs.approx();
    }

    // F-side bounds with k := h.
    const int k = h;
    if (n > k) {
        ExactRoot rf = q_exact(FamilySpec::make_F(n, k));
        out.f_lower_holds = has_root_above(rf.poly, BigRat(n + 2 * k - 5));
        // Upper bound: the largest root of g(x) = x^2 - (n+2k-2)x + 2n+2k^2-4k-2
        // dominates q(F_{n,k}); exact for even n-k+1, strict for odd.
        IntPoly quad{{BigInt(2LL * n + 2LL * k * k - 4 * k - 2), BigInt(-(n + 2LL * k - 2)), BigInt(1)}};
        if ((n - k + 1) % 2 == 0) {
            out.f_upper_holds = true;  // q is the largest root of the quadratic itself
        } else {
            ExactRoot r = rf;
            out.f_upper_holds = false;
            for (int depth = 0; depth < 256; ++depth) {
                int s = quad.sign_at(r.hi);
                if (s <= 0) {  // hi is at or below the quadratic's largest root
                    out.f_upper_holds = true;
                    break;
                }
                if (r.exact()) break;
                refine_root(r, r.width() / 2);
            }
        }
        out.f_k3_upper_holds = (k < 3) || roots_at_most(rf.poly, BigRat(n + 2 * k - 4));
        refine_root(rf, wide);
        out.q_f = rf.approx();
    }
    return out;
}

}  // namespace stlab
