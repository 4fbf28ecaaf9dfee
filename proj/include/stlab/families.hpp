#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stlab/forest.hpp"
#include "stlab/graph.hpp"

namespace stlab {

enum class FamilyKind { S, SPlus, L, F, FAttach, Hn1, N6, Complete };

/// Symbolic descriptor of a named graph family.
///
/// Conventions:
///  - S(n,h) is the complete split graph, S+(n,h) adds the edge {h, h+1}.
///  - L(t1,t2,h) has order n = t1*h + t2*(h+1) + 1 (apex first).
///  - F(n,k) has clique K_{k-1} joined to a near-perfect matching.
///  - Fatt(n,k,H) has clique K_{k-1} joined to (H u p*K_2 u K_s) with
///    2p + s = n - (k-1) - |V(H)|; k is the subscript of F_{n,k}(H).
struct FamilySpec {
    FamilyKind kind = FamilyKind::Complete;
    int n = 0;
    int h = 0;
    int k = 0;
    int t1 = 0, t2 = 0;
    std::optional<Graph> attachment;
    std::string attach_name;

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;

    /// Throws std::invalid_argument when the parameter invariants fail.
    void validate() const;
    int order() const;  // n (derived for L)

    static FamilySpec make_S(int n, int h);
    static FamilySpec make_S_plus(int n, int h);
    static FamilySpec make_L(int t1, int t2, int h);
    static FamilySpec make_F(int n, int k);
    static FamilySpec make_F_attach(int n, int k, const std::string& attach_name);
    static FamilySpec make_Hn1(int n);
    static FamilySpec make_N6();
    static FamilySpec make_complete(int n);
};

/// Named attachment graph: "K4", "K5", "N6", or "K<m>".
Graph attachment_graph(const std::string& name);

Graph build(const FamilySpec& spec);
long long edge_count_formula(const FamilySpec& spec);

/// Declared equitable partition matching the build() vertex layout, used for
/// exact quotient-matrix spectra.
std::vector<std::vector<int>> quotient_cells(const FamilySpec& spec);

struct TuranBound {
    long long bound = 0;
    /// True when the bound comes from the sufficiently-large-n theorem and no
    /// explicit threshold is available; tightness is then not asserted.
    bool asymptotic = false;
    std::vector<std::pair<std::string, Graph>> extremal;
};

/// Maximum edge count of an F-free graph of order n together with the claimed
/// extremal graphs. Exact piecewise values for k*P_3; asymptotic-regime bound
/// otherwise. Requires at least two paths.
TuranBound turan_edge_bound(const LinearForest& forest, int n);

}  // namespace stlab
