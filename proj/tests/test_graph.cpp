#include <doctest.h>

#include <random>

#include "stlab/canonical.hpp"
#include "stlab/enumerate.hpp"
#include "stlab/graph.hpp"
#include "stlab/graph6.hpp"

using namespace stlab;

TEST_CASE("basic graph operations") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.degree_sequence() == std::vector<int>{2, 2, 1, 1});

    Graph h = g.without_edge(1, 2);
    CHECK(h.edge_count() == 2);
    CHECK(components(h).size() == 2);
    CHECK(components(g).size() == 1);
}

TEST_CASE("join and complement") {
    Graph s = join(complete_graph(2), Graph::empty(3));  // S_{5,2}
    CHECK(s.order() == 5);
    CHECK(s.edge_count() == 1 + 2 * 3);
    Graph c = complement(complete_graph(4));
    CHECK(c.edge_count() == 0);
    CHECK(complement(c).edge_count() == 6);
}

TEST_CASE("graph6 fixed encodings") {
    CHECK(graph6_encode(complete_graph(3)) == "Bw");
    CHECK(graph6_encode(path_graph(3)) == "Bg");
    CHECK(graph6_encode(Graph::empty(0)) == "?");
    CHECK(graph6_decode("Bw") == complete_graph(3));
    CHECK(graph6_decode("?").order() == 0);
}

TEST_CASE("graph6 round trip, exhaustive n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : gen_all(n)) {
            std::string s = graph6_encode(g);
            CHECK(graph6_decode(s) == g);
        }
    }
}

TEST_CASE("graph6 round trip, large n uses the 3-byte size form") {
    Graph g = path_graph(100);
    std::string s = graph6_encode(g);
    CHECK(s.substr(0, 1) == "~");
    CHECK(graph6_decode(s) == g);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("Bw "), Graph6Error);     // trailing byte
    CHECK_THROWS_AS(graph6_decode("B\x01"), Graph6Error);   // out of range
    CHECK_THROWS_AS(graph6_decode("B~"), Graph6Error);      // nonzero padding
}

TEST_CASE("canonical form is permutation invariant") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> pe;
        for (auto [u, v] : edges) pe.emplace_back(perm[u], perm[v]);
        Graph h = Graph::from_edges(n, pe);
        CHECK(canonical_form(g).key() == canonical_form(h).key());
        CHECK(is_isomorphic(g, h));
    }
}

TEST_CASE("non-isomorphic graphs get distinct canonical forms") {
    CHECK(!is_isomorphic(path_graph(4), Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(canonical_form(complete_graph(4)).key() !=
          canonical_form(path_graph(4)).key());
}
