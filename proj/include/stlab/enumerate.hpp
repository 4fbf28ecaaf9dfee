#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stlab/forest.hpp"
#include "stlab/graph.hpp"

namespace stlab {

struct ScanResult {
    int n = 0;
    std::string objective;            // "edges" or "qmax"
    double best = -1.0;
    std::vector<std::string> argmax;  // canonical graph6, sorted
    long long visited = 0;            // candidate graphs examined
    long long feasible = 0;           // F-free classes of order n
    bool undecided_tie = false;       // exact comparison exhausted refinement
};

// One canonical representative per isomorphism class of order n (1 <= n <= 9),
// generated by one-vertex extensions with per-level canonical dedup. The
// optional filter must be hereditary (closed under vertex deletion); only
// graphs passing it are kept and extended.
std::vector<Graph> gen_all(int n, const std::function<bool(const Graph&)>& filter = nullptr);

// Max edges over F-free graphs of order n with all argmax classes.
ScanResult extremal_edge_scan(const LinearForest& f, int n);

// Max q over F-free graphs of order n; double enclosures first, exact
// char-poly root comparison to resolve candidates near the top.
ScanResult extremal_q_scan(const LinearForest& f, int n, double tol = 1e-9);

// `count` draws of G(n,m), m uniform in [edge_min, edge_min + n], edge sets
// uniform; deterministic under the seed.
std::vector<Graph> sample_graphs(int n, long long edge_min, int count, std::uint64_t seed);

}  // namespace stlab
