#include <doctest.h>

#include "stlab/enumerate.hpp"
#include "stlab/families.hpp"
#include "stlab/spectral.hpp"

using namespace stlab;

TEST_CASE("q_max on known graphs") {
    // K_n: q = 2n - 2.
    for (int n : {2, 3, 5, 8}) {
        SpectralEnclosure e = q_max(complete_graph(n));
        CHECK(e.lower <= 2 * n - 2);
        CHECK(e.upper >= 2 * n - 2);
        CHECK(e.width() < 1e-8);
    }
    // Star K_{1,m}: q = m + 1.
    SpectralEnclosure star = q_max(build(FamilySpec::make_S(8, 1)));
    CHECK(star.lower <= 8.0);
    CHECK(star.upper >= 8.0);
    // Single vertex: q = 0.
    SpectralEnclosure one = q_max(Graph::empty(1));
    CHECK(one.lower == 0.0);
    CHECK(one.upper == 0.0);
    // Disconnected: max over components. K_3 u K_2 -> q = 4.
    Graph g = disjoint_union(complete_graph(3), complete_graph(2));
    SpectralEnclosure e = q_max(g);
    CHECK(e.lower <= 4.0);
    CHECK(e.upper >= 4.0);
    CHECK(e.width() < 1e-8);
}

TEST_CASE("enclosures are sound against exact roots, exhaustive n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : gen_all(n)) {
            if (g.edge_count() == 0) continue;
            SpectralEnclosure e = q_max(g);
            ExactRoot r = q_exact_graph(g);
            refine_root(r, BigRat(1, 1000000000000LL));
            double q = r.approx();
            CHECK(e.lower <= q + 1e-12);
            CHECK(e.upper >= q - 1e-12);
        }
    }
}

TEST_CASE("quotient spectra match full spectra") {
    for (const char* s : {"S(n=10,h=2)", "S+(n=12,h=3)", "L(t1=2,t2=1,h=2)", "F(n=9,k=2)",
                          "F(n=10,k=3)", "Fatt(n=14,k=2,H=K4)", "Fatt(n=13,k=2,H=N6)",
                          "Hn1(n=9)", "K(n=6)"}) {
        FamilySpec spec = FamilySpec::parse(s);
        ExactRoot viaq = q_exact(spec);
        ExactRoot full = q_exact_graph(build(spec));
        // Equal algebraic numbers: certified comparison cannot separate them.
        CHECK_MESSAGE(compare_exact_roots(viaq, full, 128) == Order::Undecided, s);
        refine_root(viaq, BigRat(1, 1000000000000LL));
        refine_root(full, BigRat(1, 1000000000000LL));
        CHECK(viaq.approx() == doctest::Approx(full.approx()).epsilon(1e-10));
    }
}

TEST_CASE("published quotient polynomials") {
    // q(S_{10,2}): x^2 - 12x + 4, largest root 6 + sqrt(32).
    ExactRoot s = q_exact(FamilySpec::make_S(10, 2));
    CHECK(s.poly.c == std::vector<BigInt>{4, -12, 1});
    refine_root(s, BigRat(1, 1000000000));
    CHECK(s.approx() == doctest::Approx(11.65685424949238).epsilon(1e-8));

    // q(F_{9,2}): x^2 - 11x + 16, largest root ~ 9.2749.
    ExactRoot f = q_exact(FamilySpec::make_F(9, 2));
    CHECK(f.poly.c == std::vector<BigInt>{16, -11, 1});
    refine_root(f, BigRat(1, 1000000000));
    CHECK(f.approx() == doctest::Approx(9.2749).epsilon(1e-4));
}

TEST_CASE("certified family comparisons") {
    CompareCertificate c1 = certified_compare(FamilySpec::make_S_plus(30, 2), FamilySpec::make_S(30, 2));
    CHECK(c1.order == Order::Greater);
    CHECK(c1.text().find("poly_a") != std::string::npos);

    CompareCertificate c2 = certified_compare(FamilySpec::make_Hn1(28), FamilySpec::make_S(28, 2));
    CHECK(c2.order == Order::Less);

    CompareCertificate c3 =
        certified_compare(FamilySpec::make_F_attach(30, 1, "K4"), FamilySpec::make_F(30, 2));
    CHECK(c3.order == Order::Less);
}

TEST_CASE("lemma bound chain") {
    for (int h : {2, 3}) {
        ChainResult c = lemma_bound_chain(h, 7 * h * h);
        CHECK(c.s_regime);
        CHECK(c.s_chain_holds);
        CHECK(c.f_lower_holds);
        CHECK(c.f_upper_holds);
        CHECK(c.f_k3_upper_holds);
        CHECK(c.q_s_plus > c.q_s);
    }
    // Below regime the chain inequalities are still reported but unflagged.
    ChainResult small = lemma_bound_chain(2, 20);
    CHECK(!small.s_regime);
}

TEST_CASE("classical upper bounds") {
    Graph k5 = complete_graph(5);
    CHECK(merris_bound(k5) == doctest::Approx(8.0));
    CHECK(edge_degree_bound(k5) == 8);
    CHECK(size_order_bound(k5) == doctest::Approx(2.0 * 10 / 4 + 3));
    Graph p4 = path_graph(4);
    SpectralEnclosure e = q_max(p4);
    CHECK(merris_bound(p4) >= e.lower);
    CHECK(edge_degree_bound(p4) >= e.lower);
    CHECK(size_order_bound(p4) >= e.lower);
}
