#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace stlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficients stored ascending by degree.
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();

    /// Sign of p(x), exact.
    int sign_at(const BigRat& x) const;
    BigRat eval(const BigRat& x) const;
    IntPoly derivative() const;

    /// Primitive part of p / gcd(p, p'): same roots, all simple.
    IntPoly squarefree_part() const;

    /// Human-readable form, e.g. "x^2 - 11*x + 16".
    std::string pretty() const;
    /// Coefficient list (ascending), e.g. "[16,-11,1]".
    std::string coeff_list() const;
};

/// Exact characteristic polynomial det(xI - M) of an integer matrix
/// (Faddeev-LeVerrier; every division is exact).
IntPoly charpoly(const std::vector<std::vector<BigInt>>& m);

/// Strict bound B with every real root of p in (-B, B).
BigRat root_bound(const IntPoly& p);

/// Sturm chain of a squarefree polynomial; counts real roots exactly.
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& squarefree);
    /// Number of real roots strictly greater than x. Requires p(x) != 0.
    int roots_above(const BigRat& x) const;
    int total_real_roots() const;

  private:
    std::vector<IntPoly> seq_;
    int variations_at(const BigRat& x) const;
    int variations_at_plus_inf() const;
};

/// Largest real root of an integer polynomial, held as an exact enclosure.
/// lo == hi means the root is the rational value itself; otherwise the root
/// is the unique root of poly in (lo, hi) and poly has no root >= hi.
struct ExactRoot {
    IntPoly poly;  // squarefree
    BigRat lo, hi;

    bool exact() const { return lo == hi; }
    double approx() const;
    BigRat width() const { return hi - lo; }
};

/// Isolate the largest real root of p. Throws std::domain_error if p has no
/// real root.
ExactRoot isolate_largest_root(const IntPoly& p);

/// Bisect until hi - lo <= width (no-op for exact roots).
void refine_root(ExactRoot& r, const BigRat& width);

/// True iff every real root of p is <= c.
bool roots_at_most(const IntPoly& p, const BigRat& c);
/// True iff p has a real root strictly greater than c.
bool has_root_above(const IntPoly& p, const BigRat& c);

enum class Order { Less, Greater, Undecided };

/// Strict comparison of two exactly-represented algebraic numbers by interval
/// refinement; the arguments end up refined far enough to witness the order
/// (disjoint intervals). Returns Undecided only when the refinement depth cap
/// is hit (e.g. the two roots are equal); never returns a wrong strict order.
Order compare_exact_roots(ExactRoot& a, ExactRoot& b, int max_depth = 512);

}  // namespace stlab
