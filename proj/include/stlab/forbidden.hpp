#pragma once

#include <optional>
#include <vector>

#include "stlab/forest.hpp"
#include "stlab/graph.hpp"

namespace stlab {

enum class Ternary { Absent, Present, Unknown };

// Vertex images of each forest path, in path order (consecutive vertices
// adjacent, images pairwise disjoint).
struct Embedding {
    std::vector<std::vector<int>> paths;

    bool verify(const Graph& g, const LinearForest& f) const;
};

struct ForestResult {
    Ternary status = Ternary::Unknown;
    std::optional<Embedding> embedding;  // set iff status == Present

    bool present() const { return status == Ternary::Present; }
};

// Decides F ⊆ G (subgraph containment). Paths are embedded longest-first by
// backtracking; P_2 components go last via maximum matching on the residue.
// If the search exceeds node_budget backtrack nodes the status is Unknown.
ForestResult contains_linear_forest(const Graph& g, const LinearForest& f,
                                    long long node_budget = 100000000LL);

// k vertex-disjoint P_3's. Greedy packing over several vertex orders before
// falling back to the exhaustive search.
ForestResult contains_k_p3(const Graph& g, int k, long long node_budget = 100000000LL);

// Erdős–Gallai: e > (l-2)n/2 guarantees a path of order l. Sufficient only.
bool erdos_gallai_guarantee(long long n, long long e, int l);

// Maximum matching (blossom algorithm); returns matched pairs.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

}  // namespace stlab
