#include <doctest.h>

#include <functional>
#include <random>

#include "stlab/enumerate.hpp"
#include "stlab/families.hpp"
#include "stlab/forbidden.hpp"
#include "stlab/forest.hpp"

using namespace stlab;

namespace {

// Naive oracle: try every injective placement of the forest's vertices.
bool brute_force_contains(const Graph& g, const LinearForest& f) {
    std::vector<std::pair<int, int>> pattern_edges;
    int offset = 0;
    for (int a : f.orders()) {
        for (int i = 0; i + 1 < a; ++i) pattern_edges.emplace_back(offset + i, offset + i + 1);
        offset += a;
    }
    int t = f.total_order();
    if (t > g.order()) return false;
    std::vector<int> image(t, -1);
    std::vector<char> used(g.order(), 0);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == t) return true;
        for (int v = 0; v < g.order(); ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (auto [a, b] : pattern_edges) {
                if (b == i && image[a] != -1 && !g.has_edge(image[a], v)) ok = false;
                if (a == i && image[b] != -1 && !g.has_edge(image[b], v)) ok = false;
            }
            if (!ok) continue;
            image[i] = v;
            used[v] = 1;
            if (go(i + 1)) return true;
            used[v] = 0;
            image[i] = -1;
        }
        return false;
    };
    return go(0);
}

std::vector<std::vector<int>> forests_up_to(int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int budget, int max_part) {
        if (!cur.empty()) out.push_back(cur);
        for (int a = std::min(budget, max_part); a >= 2; --a) {
            cur.push_back(a);
            go(budget - a, a);
            cur.pop_back();
        }
    };
    go(cap, cap);
    return out;
}

}  // namespace

TEST_CASE("containment spot checks") {
    LinearForest p3p2(std::vector<int>{3, 2});
    ForestResult r = contains_linear_forest(path_graph(5), p3p2);
    REQUIRE(r.status == Ternary::Present);
    CHECK(r.embedding->verify(path_graph(5), p3p2));

    CHECK(contains_linear_forest(complete_graph(3), LinearForest({2, 2})).status == Ternary::Absent);
    CHECK(contains_linear_forest(build(FamilySpec::make_S(12, 2)), LinearForest({4, 4})).status ==
          Ternary::Absent);
}

TEST_CASE("k*P3 detector spot checks") {
    CHECK(contains_k_p3(build(FamilySpec::make_F(20, 3)), 3).status == Ternary::Absent);
    CHECK(contains_k_p3(build(FamilySpec::make_F(20, 3)).with_edge(5, 6), 3).status ==
          Ternary::Present);
    ForestResult k9 = contains_k_p3(complete_graph(9), 3);
    REQUIRE(k9.status == Ternary::Present);
    CHECK(k9.embedding->verify(complete_graph(9), LinearForest({3, 3, 3})));
}

TEST_CASE("oracle equivalence, exhaustive n <= 7") {
    auto forests = forests_up_to(7);
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : gen_all(n)) {
            for (const auto& orders : forests) {
                LinearForest f(orders);
                ForestResult r = contains_linear_forest(g, f);
                REQUIRE(r.status != Ternary::Unknown);
                bool expect = brute_force_contains(g, f);
                CHECK_MESSAGE((r.status == Ternary::Present) == expect, f.to_string());
                if (r.status == Ternary::Present) CHECK(r.embedding->verify(g, f));
            }
        }
    }
}

TEST_CASE("specialized detector agrees with generic search") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 6 + static_cast<int>(rng() % 9);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        int k = 1 + static_cast<int>(rng() % 4);
        ForestResult a = contains_k_p3(g, k);
        ForestResult b = contains_linear_forest(g, LinearForest(std::vector<int>(k, 3)));
        CHECK(a.status == b.status);
    }
}

TEST_CASE("monotonicity under edge addition") {
    std::mt19937 rng(99);
    LinearForest f(std::vector<int>{4, 2});
    for (int trial = 0; trial < 300; ++trial) {
        int n = 6 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (contains_linear_forest(g, f).status != Ternary::Present) continue;
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        CHECK(contains_linear_forest(g.with_edge(std::min(u, v), std::max(u, v)), f).status ==
              Ternary::Present);
    }
}

TEST_CASE("node budget produces unknown, not absent") {
    // A dense graph with a forest demanding heavy backtracking; budget 0 must
    // punt rather than claim absence.
    Graph g = complete_graph(9);
    ForestResult r = contains_linear_forest(g, LinearForest({9}), 1);
    CHECK(r.status == Ternary::Unknown);
}

TEST_CASE("erdos-gallai guarantee") {
    CHECK(erdos_gallai_guarantee(10, 16, 5));
    CHECK(!erdos_gallai_guarantee(10, 15, 5));
    CHECK_THROWS(erdos_gallai_guarantee(10, 5, 1));
    // Exhaustive n <= 8: the guarantee is sound.
    for (int n = 2; n <= 8; ++n) {
        for (const Graph& g : gen_all(n)) {
            for (int l = 2; l <= n; ++l) {
                if (!erdos_gallai_guarantee(n, g.edge_count(), l)) continue;
                CHECK(contains_linear_forest(g, LinearForest({l})).status == Ternary::Present);
            }
        }
    }
}

TEST_CASE("maximum matching on known graphs") {
    CHECK(maximum_matching(complete_graph(4)).size() == 2);
    CHECK(maximum_matching(path_graph(5)).size() == 2);
    CHECK(maximum_matching(Graph::empty(6)).size() == 0);
    // Petersen graph has a perfect matching.
    std::vector<std::pair<int, int>> pe;
    for (int i = 0; i < 5; ++i) {
        pe.emplace_back(i, (i + 1) % 5);
        pe.emplace_back(i, i + 5);
        pe.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    CHECK(maximum_matching(Graph::from_edges(10, pe)).size() == 5);
    // Odd cycle C_5: matching number 2 (blossom case).
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(maximum_matching(c5).size() == 2);
}
