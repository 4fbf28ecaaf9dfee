#include "stlab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stlab {

namespace {

using RatPoly = std::vector<BigRat>;  // ascending

void rat_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
    RatPoly r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = BigRat(p.c[i]);
    return r;
}

// Remainder of a / b over the rationals.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    rat_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        rat_trim(a);
    }
    return a;
}

// Clear denominators and divide by integer content; keep the sign of the
// leading coefficient.
IntPoly make_primitive(const RatPoly& p) {
    if (p.empty()) return IntPoly{};
    BigInt lcm = 1;
    for (const auto& q : p) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
    std::vector<BigInt> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        BigRat v = p[i] * lcm;
        c[i] = boost::multiprecision::numerator(v);
    }
    BigInt g = 0;
    for (const auto& v : c) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
        for (auto& v : c) v /= g;
    return IntPoly{std::move(c)};
}

int sgn(const BigRat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
int sgn(const BigInt& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// p / (x - r) for a known rational root r (Horner synthetic division).
IntPoly deflate_at(const IntPoly& p, const BigRat& r) {
    RatPoly num = to_rat(p);
    RatPoly quot(num.size() - 1, BigRat(0));
    BigRat acc = 0;
    for (size_t i = num.size(); i-- > 1;) {
        acc = acc * r + num[i];
        quot[i - 1] = acc;
    }
    return make_primitive(quot);
}

}  // namespace

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int IntPoly::sign_at(const BigRat& x) const {
    if (c.empty()) return 0;
    // p(a/b) has the sign of sum c_i a^i b^(d-i).
    const BigInt a = boost::multiprecision::numerator(x);
    const BigInt b = boost::multiprecision::denominator(x);
    BigInt acc = 0;
    BigInt apow = 1;
    std::vector<BigInt> bpow(c.size());
    bpow[c.size() - 1] = 1;
    for (size_t i = c.size() - 1; i-- > 0;) bpow[i] = bpow[i + 1] * b;
    for (size_t i = 0; i < c.size(); ++i) {
        acc += c[i] * apow * bpow[i];
        apow *= a;
    }
    return sgn(acc);
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + BigRat(c[i]);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c.size() <= 1) return IntPoly{};
    std::vector<BigInt> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * BigInt(i);
    return IntPoly{std::move(d)};
}

IntPoly IntPoly::squarefree_part() const {
    if (degree() <= 1) return *this;
    RatPoly a = to_rat(*this), b = to_rat(derivative());
    // Euclidean gcd over Q.
    while (!b.empty()) {
        RatPoly r = rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    IntPoly g = make_primitive(a);
    if (g.degree() <= 0) return *this;
    // Exact division this / g over Q.
    RatPoly num = to_rat(*this), den = to_rat(g), quot;
    quot.assign(num.size() - den.size() + 1, BigRat(0));
    while (num.size() >= den.size() && !num.empty()) {
        BigRat q = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] = q;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        rat_trim(num);
    }
    return make_primitive(quot);
}

std::string IntPoly::pretty() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        BigInt v = c[i];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        BigInt av = boost::multiprecision::abs(v);
        if (av != 1 || i == 0) os << av.str();
        if (i >= 1) {
            if (av != 1) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

std::string IntPoly::coeff_list() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].str();
    }
    os << "]";
    return os.str();
}

IntPoly charpoly(const std::vector<std::vector<BigInt>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<BigInt> coeff(n + 1);
    coeff[n] = 1;
    if (n == 0) return IntPoly{std::move(coeff)};
    // Faddeev-LeVerrier: A_1 = M, c_k = -tr(M A_k)/k with A_{k+1} = M(A_k + c_k I).
    std::vector<std::vector<BigInt>> a = m;
    for (int k = 1; k <= n; ++k) {
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += a[i][i];
        BigInt ck = -tr / k;  // exact
        coeff[n - k] = ck;
        if (k == n) break;
        std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i) a[i][i] += ck;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (int l = 0; l < n; ++l) s += m[i][l] * a[l][j];
                b[i][j] = std::move(s);
            }
        a = std::move(b);
    }
    return IntPoly{std::move(coeff)};
}

BigRat root_bound(const IntPoly& p) {
    if (p.degree() < 1) return BigRat(1);
    BigInt lead = boost::multiprecision::abs(p.c.back());
    BigInt mx = 0;
    for (size_t i = 0; i + 1 < p.c.size(); ++i)
        mx = std::max(mx, BigInt(boost::multiprecision::abs(p.c[i])));
    BigRat b = 1 + BigRat(mx, lead);
    return b + 1;
}

SturmChain::SturmChain(const IntPoly& p) {
    seq_.push_back(p);
    IntPoly d = p.derivative();
    if (!d.is_zero()) seq_.push_back(d);
    while (seq_.size() >= 2 && seq_.back().degree() >= 1) {
        RatPoly r = rat_rem(to_rat(seq_[seq_.size() - 2]), to_rat(seq_.back()));
        if (r.empty()) break;
        for (auto& q : r) q = -q;
        seq_.push_back(make_primitive(r));
    }
}

int SturmChain::variations_at(const BigRat& x) const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_at_plus_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        if (p.is_zero()) continue;
        int s = sgn(p.c.back());
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::roots_above(const BigRat& x) const {
    return variations_at(x) - variations_at_plus_inf();
}

int SturmChain::total_real_roots() const {
    BigRat b = root_bound(seq_.front());
    return roots_above(-b);
}

double ExactRoot::approx() const {
    return static_cast<double>((lo + hi) / 2);
}

ExactRoot isolate_largest_root(const IntPoly& p_in) {
    IntPoly p = p_in.squarefree_part();
    if (p.degree() < 1) throw std::domain_error("isolate_largest_root: constant polynomial");
    BigRat bound = root_bound(p);
    BigRat lo = -bound, hi = bound;
    for (;;) {
        SturmChain chain(p);
        if (chain.roots_above(lo) == 0) throw std::domain_error("isolate_largest_root: no real root");
        // Shrink (lo, hi) until it contains exactly the largest root.
        while (chain.roots_above(lo) > 1 || p.sign_at(lo) == 0) {
            BigRat mid = (lo + hi) / 2;
            if (p.sign_at(mid) == 0) {
                // Exact rational root at mid; if nothing lies above it, done.
                if (chain.roots_above(mid) == 0) return ExactRoot{p, mid, mid};
                // Otherwise deflate and keep isolating above mid.
                p = deflate_at(p, mid).squarefree_part();
                lo = mid;
                goto restart;
            }
            if (chain.roots_above(mid) >= 1)
                lo = mid;
            else
                hi = mid;
        }
        // Pin down easy rational roots so equalities become decidable: a
        // degree-1 factor directly, an integer root once the interval is
        // narrower than 1.
        {
            if (p.degree() == 1) {
                // Division normalizes signs; the two-argument rational
                // constructor rejects negative denominators.
                BigRat r = BigRat(-p.c[0]) / BigRat(p.c[1]);
                return ExactRoot{p, r, r};
            }
            ExactRoot out{p, lo, hi};
            refine_root(out, BigRat(1, 2));
            if (!out.exact()) {
                BigInt num = boost::multiprecision::numerator(out.hi);
                BigInt den = boost::multiprecision::denominator(out.hi);
                BigInt fl = num / den;
                if (num < 0 && fl * den != num) fl -= 1;  // floor(hi)
                BigRat cand(fl);
                if (cand > out.lo && cand <= out.hi && p.sign_at(cand) == 0) {
                    out.lo = out.hi = cand;
                }
            }
            return out;
        }
    restart:;
    }
}

void refine_root(ExactRoot& r, const BigRat& width) {
    if (r.exact()) return;
    // Invariant: unique root in (lo, hi), p(lo) and p(hi) have opposite signs
    // once the interval isolates a simple root of a squarefree polynomial.
    int slo = r.poly.sign_at(r.lo);
    while (r.hi - r.lo > width) {
        BigRat mid = (r.lo + r.hi) / 2;
        int sm = r.poly.sign_at(mid);
        if (sm == 0) {
            r.lo = r.hi = mid;
            return;
        }
        if (sm == slo)
            r.lo = mid;
        else
            r.hi = mid;
    }
}

bool roots_at_most(const IntPoly& p, const BigRat& c) {
    return !has_root_above(p, c);
}

bool has_root_above(const IntPoly& p, const BigRat& c) {
    IntPoly q = p.squarefree_part();
    if (q.degree() < 1) return false;
    if (q.sign_at(c) == 0) {
        // roots_above requires p(c) != 0, so divide out the root at c.
        q = deflate_at(q, c).squarefree_part();
        if (q.degree() < 1) return false;
        if (q.sign_at(c) == 0) throw std::logic_error("has_root_above: repeated root after squarefree");
    }
    SturmChain chain(q);
    return chain.roots_above(c) > 0;
}

Order compare_exact_roots(ExactRoot& a, ExactRoot& b, int max_depth) {
    // Root of a lies in [a.lo, a.hi], with both endpoints attained only when
    // exact; strict order is certain once the intervals cannot overlap.
    auto certainly_less = [](const ExactRoot& x, const ExactRoot& y) {
        if (x.hi < y.lo) return true;
        if (x.hi == y.lo && !(x.exact() && y.exact())) return true;
        return false;
    };
    for (int depth = 0; depth <= max_depth; ++depth) {
        if (certainly_less(a, b)) return Order::Less;
        if (certainly_less(b, a)) return Order::Greater;
        if (a.exact() && b.exact()) return Order::Undecided;  // equal values
        ExactRoot& wide = (!b.exact() && (a.exact() || b.width() >= a.width())) ? b : a;
        BigRat target = wide.width() / 2;
        refine_root(wide, target);
    }
    return Order::Undecided;
}

}  // namespace stlab
