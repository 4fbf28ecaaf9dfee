#include <doctest.h>

#include "stlab/poly.hpp"

using namespace stlab;

TEST_CASE("charpoly of small integer matrices") {
    // [[2,1],[1,2]] -> x^2 - 4x + 3
    std::vector<std::vector<BigInt>> m{{2, 1}, {1, 2}};
    IntPoly p = charpoly(m);
    CHECK(p.c == std::vector<BigInt>{3, -4, 1});

    // Companion-style check: diag(5) -> x - 5.
    std::vector<std::vector<BigInt>> d{{5}};
    CHECK(charpoly(d).c == std::vector<BigInt>{-5, 1});

    // 3x3 all-ones: x^3 - 3x^2 (eigenvalues 3, 0, 0).
    std::vector<std::vector<BigInt>> ones(3, std::vector<BigInt>(3, 1));
    CHECK(charpoly(ones).c == std::vector<BigInt>{0, 0, -3, 1});
}

TEST_CASE("sturm root counting") {
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    IntPoly p{{-6, 11, -6, 1}};
    SturmChain chain(p);
    CHECK(chain.total_real_roots() == 3);
    CHECK(chain.roots_above(BigRat(0)) == 3);
    CHECK(chain.roots_above(BigRat(3, 2)) == 2);
    CHECK(chain.roots_above(BigRat(5, 2)) == 1);
    CHECK(chain.roots_above(BigRat(3)) == 0);  // roots_above is strict

    // x^2 + 1 has no real roots.
    CHECK(SturmChain(IntPoly{{1, 0, 1}}).total_real_roots() == 0);
}

TEST_CASE("largest root isolation, irrational") {
    // x^2 - 2: largest root sqrt(2)
    ExactRoot r = isolate_largest_root(IntPoly{{-2, 0, 1}});
    refine_root(r, BigRat(1, 1000000000000LL));
    CHECK(r.approx() == doctest::Approx(1.41421356237).epsilon(1e-9));
    CHECK(!r.exact());
}

TEST_CASE("largest root isolation, rational root hit") {
    // (x-3)(x+1) = x^2 - 2x - 3: largest root exactly 3.
    ExactRoot r = isolate_largest_root(IntPoly{{-3, -2, 1}});
    CHECK(r.exact());
    CHECK(r.lo == BigRat(3));

    // (x-1/2 scaled): 2x - 1.
    ExactRoot half = isolate_largest_root(IntPoly{{-1, 2}});
    CHECK(half.exact());
    CHECK(half.lo == BigRat(1, 2));
}

TEST_CASE("roots_at_most and has_root_above") {
    IntPoly p{{-6, 11, -6, 1}};  // roots 1, 2, 3
    CHECK(roots_at_most(p, BigRat(3)));
    CHECK(!roots_at_most(p, BigRat(2)));
    CHECK(has_root_above(p, BigRat(5, 2)));
    CHECK(!has_root_above(p, BigRat(3)));
}

TEST_CASE("certified comparison of algebraic roots") {
    ExactRoot s2 = isolate_largest_root(IntPoly{{-2, 0, 1}});   // sqrt(2)
    ExactRoot s3 = isolate_largest_root(IntPoly{{-3, 0, 1}});   // sqrt(3)
    CHECK(compare_exact_roots(s2, s3) == Order::Less);
    CHECK(compare_exact_roots(s3, s2) == Order::Greater);
    // After the call the witnessing intervals are disjoint.
    CHECK((s2.hi < s3.lo || (s2.hi == s3.lo && !(s2.exact() && s3.exact()))));

    // Equal roots from different polynomials stay undecided.
    ExactRoot a = isolate_largest_root(IntPoly{{-2, 0, 1}});
    ExactRoot b = isolate_largest_root(IntPoly{{-4, 0, 2}});
    CHECK(compare_exact_roots(a, b, 64) == Order::Undecided);

    // Rational vs irrational close together: 3/2 + tiny vs sqrt(2).
    ExactRoot rat = isolate_largest_root(IntPoly{{-99, 70}});  // 99/70 > sqrt(2)
    ExactRoot irr = isolate_largest_root(IntPoly{{-2, 0, 1}});
    CHECK(compare_exact_roots(irr, rat) == Order::Less);
}

TEST_CASE("squarefree part strips multiplicities") {
    // (x-1)^2 = x^2 - 2x + 1
    IntPoly sq{{1, -2, 1}};
    ExactRoot r = isolate_largest_root(sq);
    CHECK(r.exact());
    CHECK(r.lo == BigRat(1));
}
