#pragma once

#include <string>
#include <vector>

#include "stlab/graph.hpp"

namespace stlab {

/// Isomorphism-invariant discriminating label: the lexicographically minimal
/// upper-triangle bitstring (graph6 bit order) over all vertex relabelings
/// consistent with an iterated degree refinement. Two graphs have equal
/// canonical forms iff they are isomorphic. Intended for n <= 11.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> bits;  // packed upper-triangle, column-major

    bool operator==(const CanonicalForm& o) const = default;
    /// Compact key usable in hash sets.
    std::string key() const;
};

CanonicalForm canonical_form(const Graph& g);
/// The relabeled graph realizing the canonical form.
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace stlab
