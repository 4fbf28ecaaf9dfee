#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stlab/families.hpp"
#include "stlab/graph.hpp"

namespace stlab {

// Vertex set whose removal leaves no edge: G ⊆ S_{n,h} iff vc(G) <= h.
std::optional<std::vector<int>> embeds_in_S(const Graph& g, int h);

struct SPlusWitness {
    std::vector<int> cover;                       // maps onto the clique side
    std::optional<std::pair<int, int>> extra_edge;  // the one edge left uncovered
};
// G ⊆ S⁺_{n,h} iff some C with |C| <= h leaves at most one edge.
std::optional<SPlusWitness> embeds_in_S_plus(const Graph& g, int h);

// G ⊆ F_{n,k} iff some C with |C| <= k-1 leaves max degree <= 1.
std::optional<std::vector<int>> embeds_in_F(const Graph& g, int k);

struct FAttachWitness {
    std::vector<int> cover;          // onto the K_{k-2} clique
    std::vector<int> into_h;         // vertices of G mapped into the attachment
    std::vector<int> h_image;        // their images (attachment vertex ids)
};
// G ⊆ F_{n,k-1}(H) for H named "K4"/"K5"/"N6": some C with |C| <= k-2 such
// that every component of G-C needing more than a pair, plus any matching
// overflow, embeds jointly into H.
std::optional<FAttachWitness> embeds_in_F_attach(const Graph& g, int k, const std::string& h_name);

struct LWitness {
    int apex = -1;                   // vertex mapped onto the join apex, or -1
    std::vector<int> bin_of;         // component index -> bin index
};
// G ⊆ L_{t1,t2,h,h+1}: optional apex, components of the rest packed into
// t1 cliques of order h and t2 of order h+1.
std::optional<LWitness> embeds_in_L(const Graph& g, int t1, int t2, int h);

struct Hn1Witness {
    int u = -1, v = -1;
    std::optional<std::pair<int, int>> extra_edge;
};
std::optional<Hn1Witness> embeds_in_Hn1(const Graph& g);

// For a 2·P3-free graph of order >= 6, the host labels that contain it
// (subset of {"F(k=2)", "Fatt(K4,k=2)", "Fatt(K5,k=2)", "Fatt(N6,k=2)"}).
// Throws std::invalid_argument if G contains 2·P3 or has order < 6.
std::vector<std::string> classify_2p3_free(const Graph& g);

}  // namespace stlab
