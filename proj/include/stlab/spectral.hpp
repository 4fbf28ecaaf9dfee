#pragma once

#include <string>

#include "stlab/families.hpp"
#include "stlab/graph.hpp"
#include "stlab/poly.hpp"

namespace stlab {

/// Two-sided bracket of the signless-Laplacian spectral radius q(G).
struct SpectralEnclosure {
    double lower = 0.0;
    double upper = 0.0;
    long long iterations = 0;
    bool converged = true;
    double mid() const { return 0.5 * (lower + upper); }
    double width() const { return upper - lower; }
};

/// Iterative enclosure of q(G). Computed per connected component (the radius
/// of a union is the max over components). The lower bound is the Rayleigh
/// quotient of the iterate; the upper bound is the Collatz-Wielandt max ratio
/// max_i (Qx)_i / x_i, valid for every positive iterate of the nonnegative
/// irreducible Q of a connected graph. Deterministic start vector: degrees + 1.
SpectralEnclosure q_max(const Graph& g, double tol = 1e-10, long long max_iter = 1'000'000);

/// Full signless Laplacian Q = D + A as an exact integer matrix.
std::vector<std::vector<BigInt>> q_matrix(const Graph& g);

/// Exact characteristic polynomial of Q(G); intended for small n.
IntPoly q_charpoly(const Graph& g);

/// Exact largest Q-eigenvalue of an arbitrary graph via the full
/// characteristic polynomial; test oracle for small n.
ExactRoot q_exact_graph(const Graph& g);

/// Exact q for a structured family: characteristic polynomial of the declared
/// equitable quotient (verified equitable against the built graph), largest
/// root isolated by exact-sign bisection. Disconnected families resolve to the
/// dominant component by certified comparison.
ExactRoot q_exact(const FamilySpec& spec);

/// max_v { d(v) + (1/d(v)) sum_{z in N(v)} d(z) } over vertices with d(v) >= 1.
/// Isolated vertices are skipped (their q contribution is 0).
double merris_bound(const Graph& g);

/// max_{uv in E} { d(u) + d(v) }; 0 for an edgeless graph.
long long edge_degree_bound(const Graph& g);

/// 2 e(G) / (n - 1) + n - 2. Requires n >= 2.
double size_order_bound(const Graph& g);

/// Audit certificate for a strict spectral comparison: the two characteristic
/// polynomials plus disjoint rational isolating intervals.
struct CompareCertificate {
    Order order = Order::Undecided;
    ExactRoot a, b;
    std::string text() const;
};

/// Strict ordering of q(a) vs q(b) by exact root isolation; no floating point.
/// Returns Undecided (never a wrong order) if the refinement cap is reached.
CompareCertificate certified_compare(const FamilySpec& a, const FamilySpec& b, int max_depth = 512);

/// The q-inequality chain for S-type families and the F_{n,k} root bounds,
/// every strict inequality checked by exact arithmetic.
struct ChainResult {
    bool s_chain_holds = false;     // q(S+) > q(S) > n+2h-2 - 2(h^2-h)/(n+2h-3) > n+2h-3
    bool s_regime = false;          // n >= 7h^2
    bool f_lower_holds = false;     // n+2k-5 < q(F_{n,k})   (k := h)
    bool f_upper_holds = false;     // q(F_{n,k}) <= (n+2k-2+sqrt((n+2k-6)^2-8(k^2-4k+3)))/2
    bool f_k3_upper_holds = false;  // q(F_{n,k}) <= n+2k-4 when k >= 3 (true when k < 3)
    bool f_regime = false;          // n >= 2k^2
    double q_s_plus = 0, q_s = 0, q_f = 0;
};

ChainResult lemma_bound_chain(int h, int n);

}  // namespace stlab
