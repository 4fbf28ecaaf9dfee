#include <doctest.h>

#include <functional>

#include "stlab/enumerate.hpp"
#include "stlab/families.hpp"
#include "stlab/forbidden.hpp"
#include "stlab/hosts.hpp"

using namespace stlab;

namespace {

// Generic ground truth: injective edge-preserving map of g into host.
bool subgraph_of(const Graph& g, const Graph& host) {
    if (g.order() > host.order()) return false;
    // Map highest-degree pattern vertices first.
    std::vector<int> order(g.order());
    for (int i = 0; i < g.order(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> image(g.order(), -1);
    std::vector<char> used(host.order(), 0);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == g.order()) return true;
        int v = order[i];
        for (int t = 0; t < host.order(); ++t) {
            if (used[t]) continue;
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (image[w] != -1 && !host.has_edge(t, image[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = t;
            used[t] = 1;
            if (go(i + 1)) return true;
            used[t] = 0;
            image[v] = -1;
        }
        return false;
    };
    return go(0);
}

}  // namespace

TEST_CASE("host predicate spot checks") {
    // p*K_2 has vertex cover p.
    Graph m3 = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(embeds_in_S(m3, 3).has_value());
    CHECK(!embeds_in_S(m3, 2).has_value());
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(!embeds_in_S(c5, 2).has_value());
    CHECK(embeds_in_S(build(FamilySpec::make_S(12, 3)), 3).has_value());

    CHECK(embeds_in_S_plus(build(FamilySpec::make_S_plus(12, 3)), 3).has_value());
    Graph two_extra = build(FamilySpec::make_S(12, 3)).with_edge(3, 4).with_edge(5, 6);
    CHECK(!embeds_in_S_plus(two_extra, 3).has_value());
    CHECK(embeds_in_S_plus(complete_graph(4), 2).has_value());

    CHECK(embeds_in_F(complete_graph(3), 2).has_value());
    Graph two_p3 = LinearForest({3, 3}).build();
    CHECK(!embeds_in_F(two_p3, 2).has_value());
    CHECK(embeds_in_F(build(FamilySpec::make_F(25, 3)), 3).has_value());

    Graph k4_m5 = disjoint_union(complete_graph(4), Graph::from_edges(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}));
    CHECK(embeds_in_F_attach(k4_m5, 2, "K4").has_value());
    Graph n6_m3 = disjoint_union(build(FamilySpec::make_N6()),
                                 Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}));
    CHECK(embeds_in_F_attach(n6_m3, 2, "N6").has_value());
    Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
    CHECK(!embeds_in_F_attach(two_k4, 2, "K4").has_value());

    CHECK(embeds_in_L(build(FamilySpec::make_L(2, 1, 2)), 2, 1, 2).has_value());
    Graph apex_24 = join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(4)));
    CHECK(!embeds_in_L(apex_24, 2, 1, 2).has_value());
    CHECK(embeds_in_Hn1(build(FamilySpec::make_Hn1(7))).has_value());
}

TEST_CASE("witnesses reconstruct valid embeddings") {
    Graph g = build(FamilySpec::make_S_plus(10, 2));
    auto w = embeds_in_S_plus(g, 2);
    REQUIRE(w.has_value());
    CHECK(w->cover.size() <= 2);
    std::vector<char> in_cov(g.order(), 0);
    for (int v : w->cover) in_cov[v] = 1;
    int outside = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && !in_cov[u] && !in_cov[v]) ++outside;
    CHECK(outside == (w->extra_edge ? 1 : 0));
}

TEST_CASE("ground truth against generic subgraph isomorphism, exhaustive n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : gen_all(n)) {
            for (int h = 1; h <= 3; ++h) {
                CHECK(embeds_in_S(g, h).has_value() ==
                      subgraph_of(g, build(FamilySpec::make_S(std::max(n, h + 1), h))));
                if (n - h >= 2)
                    CHECK(embeds_in_S_plus(g, h).has_value() ==
                          subgraph_of(g, build(FamilySpec::make_S_plus(n, h))));
            }
            for (int k = 1; k <= 3; ++k)
                CHECK(embeds_in_F(g, k).has_value() ==
                      subgraph_of(g, build(FamilySpec::make_F(std::max(n, k + 1), k))));
            if (n >= 6)
                CHECK(embeds_in_F_attach(g, 2, "K4").has_value() ==
                      subgraph_of(g, build(FamilySpec::make_F_attach(n, 1, "K4"))));
            if (n >= 7) {
                CHECK(embeds_in_F_attach(g, 2, "N6").has_value() ==
                      subgraph_of(g, build(FamilySpec::make_F_attach(n, 1, "N6"))));
                CHECK(embeds_in_Hn1(g).has_value() ==
                      subgraph_of(g, build(FamilySpec::make_Hn1(n))));
                CHECK(embeds_in_L(g, 2, 1, 2).has_value() ==
                      subgraph_of(g, build(FamilySpec::make_L(2, 1, 2))));
            }
        }
    }
}

TEST_CASE("hereditary under edge deletion") {
    Graph g = build(FamilySpec::make_F(12, 3));
    REQUIRE(embeds_in_F(g, 3).has_value());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) CHECK(embeds_in_F(g.without_edge(u, v), 3).has_value());
}

TEST_CASE("2p3-free classification") {
    Graph star = build(FamilySpec::make_S(8, 1));
    auto labels = classify_2p3_free(star);
    CHECK(std::find(labels.begin(), labels.end(), "F(k=2)") != labels.end());

    auto n6 = classify_2p3_free(build(FamilySpec::make_N6()));
    CHECK(std::find(n6.begin(), n6.end(), "Fatt(N6,k=2)") != n6.end());

    Graph k5_m2 = disjoint_union(complete_graph(5), Graph::from_edges(4, {{0, 1}, {2, 3}}));
    auto k5 = classify_2p3_free(k5_m2);
    CHECK(std::find(k5.begin(), k5.end(), "Fatt(K5,k=2)") != k5.end());

    CHECK_THROWS_AS(classify_2p3_free(LinearForest({3, 3}).build()), std::invalid_argument);
    CHECK_THROWS_AS(classify_2p3_free(complete_graph(3)), std::invalid_argument);  // n < 6
}
