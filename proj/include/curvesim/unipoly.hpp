#pragma once

#include "curvesim/rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <vector>

namespace curvesim {

template <class K>
class UniPoly;

// Coefficient-ring hooks. Every ring used for polynomial coefficients
// specializes this: rationals, integers, nested polynomials, and (in
// numberfield.hpp) number-field elements.
template <class K>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static constexpr bool is_field = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational divexact(const Rational& a, const Rational& b) { return a / b; }
    static Rational gcd(const Rational&, const Rational&) { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct RingTraits<Integer> {
    static constexpr bool is_field = false;
    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }
    static bool is_zero(const Integer& a) { return sgn(a) == 0; }
    static Integer divexact(const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Integer gcd(const Integer& a, const Integer& b) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static Integer from_rational(const Rational& r) {
        assert(r.get_den() == 1);
        return Integer(r.get_num());
    }
};

template <class K>
K ring_pow(const K& base, unsigned long e) {
    K r = RingTraits<K>::one();
    K b = base;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

template <class K>
K ring_from_uint(unsigned long n) {
    K r = RingTraits<K>::zero();
    K b = RingTraits<K>::one();
    while (n) {
        if (n & 1) r = r + b;
        b = b + b;
        n >>= 1;
    }
    return r;
}

// Dense univariate polynomial, coefficients ascending by degree.
// Invariant: no trailing zero coefficient (zero polynomial is empty).
template <class K>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(K v) {
        UniPoly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }
    static UniPoly variable() { return monomial(RingTraits<K>::one(), 1); }
    static UniPoly monomial(K v, int deg) {
        UniPoly p;
        if (!RingTraits<K>::is_zero(v)) {
            p.c_.assign(deg + 1, RingTraits<K>::zero());
            p.c_[deg] = std::move(v);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }
    const K& lc() const { return c_.back(); }
    const K& operator[](size_t i) const { return c_[i]; }
    K coeff(int i) const {
        if (i < 0 || i >= (int)c_.size()) return RingTraits<K>::zero();
        return c_[i];
    }
    const std::vector<K>& coeffs() const { return c_; }
    void set_coeff(int i, K v) {
        if (i >= (int)c_.size()) c_.resize(i + 1, RingTraits<K>::zero());
        c_[i] = std::move(v);
        trim();
    }

    bool is_constant() const { return degree() <= 0; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), RingTraits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), RingTraits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        std::vector<K> r = c_;
        for (auto& v : r) v = RingTraits<K>::zero() - v;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly{};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, RingTraits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (RingTraits<K>::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const K& s) {
        if (RingTraits<K>::is_zero(s)) return UniPoly{};
        std::vector<K> r = a.c_;
        for (auto& v : r) v = v * s;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const K& s, const UniPoly& a) { return a * s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!RingTraits<K>::is_zero(a.c_[i] - b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly shifted_up(int k) const { // multiply by x^k
        if (is_zero()) return *this;
        std::vector<K> r(c_.size() + k, RingTraits<K>::zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return UniPoly(std::move(r));
    }

    K eval(const K& x) const {
        K r = RingTraits<K>::zero();
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UniPoly derivative() const {
        if (degree() < 1) return UniPoly{};
        std::vector<K> r(c_.size() - 1, RingTraits<K>::zero());
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * ring_from_uint<K>(i);
        return UniPoly(std::move(r));
    }

    // p(1/x) * x^deg
    UniPoly reversed() const {
        std::vector<K> r(c_.rbegin(), c_.rend());
        return UniPoly(std::move(r));
    }

    template <class K2, class Fn>
    UniPoly<K2> map_coeffs(Fn&& f) const {
        std::vector<K2> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(f(v));
        return UniPoly<K2>(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && RingTraits<K>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

// Nested polynomials are themselves a coefficient ring (e.g. Q[lambda][s0]).
template <class K>
struct RingTraits<UniPoly<K>> {
    static constexpr bool is_field = false;
    static UniPoly<K> zero() { return UniPoly<K>{}; }
    static UniPoly<K> one() { return UniPoly<K>::constant(RingTraits<K>::one()); }
    static bool is_zero(const UniPoly<K>& p) { return p.is_zero(); }
    static UniPoly<K> divexact(const UniPoly<K>& a, const UniPoly<K>& b);
    static UniPoly<K> gcd(const UniPoly<K>& a, const UniPoly<K>& b);
    static UniPoly<K> from_rational(const Rational& r) {
        return UniPoly<K>::constant(RingTraits<K>::from_rational(r));
    }
};

// ---------------------------------------------------------------------------
// Division

// Field-coefficient division with remainder.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem_field(const UniPoly<K>& a, const UniPoly<K>& b) {
    static_assert(RingTraits<K>::is_field);
    assert(!b.is_zero());
    UniPoly<K> r = a;
    std::vector<K> q;
    int db = b.degree();
    if (a.degree() >= db) q.assign(a.degree() - db + 1, RingTraits<K>::zero());
    while (!r.is_zero() && r.degree() >= db) {
        K f = RingTraits<K>::divexact(r.lc(), b.lc());
        int k = r.degree() - db;
        q[k] = f;
        r = r - (b * f).shifted_up(k);
        if (!r.is_zero() && r.degree() == db + k) {
            // guard against non-cancelling subtraction (cannot happen over a field)
            assert(false);
        }
    }
    return {UniPoly<K>(std::move(q)), r};
}

template <class K>
std::optional<UniPoly<K>> try_divexact(const UniPoly<K>& a, const UniPoly<K>& b);

// Ring-level exact division that reports failure instead of asserting.
inline std::optional<Rational> ring_try_divexact(const Rational& a, const Rational& b) {
    return a / b;
}
inline std::optional<Integer> ring_try_divexact(const Integer& a, const Integer& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    return RingTraits<Integer>::divexact(a, b);
}
template <class K>
std::optional<UniPoly<K>> ring_try_divexact(const UniPoly<K>& a, const UniPoly<K>& b) {
    return try_divexact(a, b);
}

// Exact division over any coefficient ring (returns nullopt when not exact).
template <class K>
std::optional<UniPoly<K>> try_divexact(const UniPoly<K>& a, const UniPoly<K>& b) {
    assert(!b.is_zero());
    if (a.is_zero()) return UniPoly<K>{};
    if (a.degree() < b.degree()) return std::nullopt;
    UniPoly<K> r = a;
    std::vector<K> q(a.degree() - b.degree() + 1, RingTraits<K>::zero());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        // the quotient of an exact division has coefficients in the ring, so
        // every leading division below must be exact as well
        auto f = ring_try_divexact(r.lc(), b.lc());
        if (!f) return std::nullopt;
        int k = r.degree() - b.degree();
        q[k] = *f;
        r = r - (b * (*f)).shifted_up(k);
        if (!r.is_zero() && r.degree() >= b.degree() + k) return std::nullopt;
    }
    if (!r.is_zero()) return std::nullopt;
    return UniPoly<K>(std::move(q));
}

template <class K>
UniPoly<K> divexact_poly(const UniPoly<K>& a, const UniPoly<K>& b) {
    auto q = try_divexact(a, b);
    assert(q.has_value());
    return *q;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class K>
UniPoly<K> prem(const UniPoly<K>& a, const UniPoly<K>& b) {
    assert(!b.is_zero());
    UniPoly<K> r = a;
    int db = b.degree();
    int e = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        UniPoly<K> s = (b * r.lc()).shifted_up(k);
        r = r * b.lc() - s;
        --e;
    }
    if (e > 0) r = r * ring_pow(b.lc(), e);
    return r;
}

// ---------------------------------------------------------------------------
// Subresultant chain (Collins / Cohen). Works over any integral domain with
// exact division; the fraction-free scheme keeps coefficient growth bounded
// by determinant sizes.

// Resultant of a and b.
template <class K>
K resultant(const UniPoly<K>& a0, const UniPoly<K>& b0) {
    using R = RingTraits<K>;
    if (a0.is_zero() || b0.is_zero()) return R::zero();
    UniPoly<K> A = a0, B = b0;
    bool negate = false;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) negate = !negate;
    }
    if (A.degree() == 0) return R::one();
    if (B.degree() == 0) {
        K v = ring_pow(B.lc(), (unsigned long)A.degree());
        return negate ? R::zero() - v : v;
    }
    K g = R::one(), h = R::one();
    while (true) {
        int da = A.degree(), db = B.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) negate = !negate;
        UniPoly<K> rem = prem(A, B);
        A = B;
        K denom = g * ring_pow(h, (unsigned long)delta);
        B = rem.is_zero() ? UniPoly<K>{} : rem.template map_coeffs<K>([&](const K& v) {
            return R::divexact(v, denom);
        });
        g = A.lc();
        if (delta >= 1)
            h = delta == 1 ? g : R::divexact(ring_pow(g, (unsigned long)delta),
                                             ring_pow(h, (unsigned long)(delta - 1)));
        if (B.is_zero()) return R::zero();
        if (B.degree() == 0) {
            int dA = A.degree();
            K num = ring_pow(B.lc(), (unsigned long)dA);
            K v = dA >= 1 ? R::divexact(num, ring_pow(h, (unsigned long)(dA - 1))) : num;
            return negate ? R::zero() - v : v;
        }
    }
}

// Last nonzero element of the subresultant PRS; an associate of the gcd of the
// primitive parts of a and b. The caller normalizes.
template <class K>
UniPoly<K> subresultant_prs_last(const UniPoly<K>& a0, const UniPoly<K>& b0) {
    using R = RingTraits<K>;
    UniPoly<K> A = a0, B = b0;
    if (A.degree() < B.degree()) std::swap(A, B);
    if (B.is_zero()) return A;
    K g = R::one(), h = R::one();
    while (true) {
        int delta = A.degree() - B.degree();
        UniPoly<K> rem = prem(A, B);
        if (rem.is_zero()) return B;
        if (rem.degree() == 0) return rem; // coprime: gcd is a constant
        K denom = g * ring_pow(h, (unsigned long)delta);
        A = B;
        B = rem.template map_coeffs<K>([&](const K& v) { return R::divexact(v, denom); });
        g = A.lc();
        if (delta >= 1)
            h = delta == 1 ? g : R::divexact(ring_pow(g, (unsigned long)delta),
                                             ring_pow(h, (unsigned long)(delta - 1)));
    }
}

// ---------------------------------------------------------------------------
// Content / primitive parts

template <class K>
K poly_content(const UniPoly<K>& p) {
    K g = RingTraits<K>::zero();
    bool first = true;
    for (const auto& v : p.coeffs()) {
        if (RingTraits<K>::is_zero(v)) continue;
        if (first) {
            g = v;
            first = false;
        } else {
            g = RingTraits<K>::gcd(g, v);
        }
    }
    return first ? RingTraits<K>::zero() : g;
}

template <class K>
UniPoly<K> primitive_part(const UniPoly<K>& p) {
    if (p.is_zero()) return p;
    K c = poly_content(p);
    return p.template map_coeffs<K>([&](const K& v) { return RingTraits<K>::divexact(v, c); });
}

// Recursive "sign" of the innermost leading rational coefficient; used to fix
// a deterministic orientation for primitive normal forms.
inline int deep_sign(const Rational& v) { return sgn(v); }
inline int deep_sign(const Integer& v) { return sgn(v); }
template <class K>
int deep_sign(const UniPoly<K>& p) {
    return p.is_zero() ? 0 : deep_sign(p.lc());
}

// ---------------------------------------------------------------------------
// Integer/rational conversions

inline UniPoly<Integer> to_integer_poly(const UniPoly<Rational>& p, Integer* denom_out = nullptr) {
    Integer d = 1;
    for (const auto& v : p.coeffs()) {
        Integer den = v.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        d *= RingTraits<Integer>::divexact(den, g);
    }
    std::vector<Integer> r;
    r.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        Rational scaled = v * Rational(d);
        r.emplace_back(scaled.get_num());
    }
    if (denom_out) *denom_out = d;
    return UniPoly<Integer>(std::move(r));
}

inline UniPoly<Rational> to_rational_poly(const UniPoly<Integer>& p) {
    return p.map_coeffs<Rational>([](const Integer& v) { return Rational(v); });
}

// Primitive integer polynomial with positive leading coefficient, an associate
// of p over Q.
inline UniPoly<Integer> primitive_integer_associate(const UniPoly<Rational>& p) {
    UniPoly<Integer> z = to_integer_poly(p);
    if (z.is_zero()) return z;
    Integer c = poly_content(z);
    if (sgn(z.lc()) < 0) c = -c;
    return z.map_coeffs<Integer>(
        [&](const Integer& v) { return RingTraits<Integer>::divexact(v, c); });
}

template <class K>
UniPoly<K> make_monic(const UniPoly<K>& p) {
    static_assert(RingTraits<K>::is_field);
    if (p.is_zero()) return p;
    K inv_lc = RingTraits<K>::divexact(RingTraits<K>::one(), p.lc());
    return p * inv_lc;
}

// ---------------------------------------------------------------------------
// GCD dispatch

// Monic Euclidean gcd over a field.
template <class K>
UniPoly<K> gcd_field(const UniPoly<K>& a0, const UniPoly<K>& b0) {
    static_assert(RingTraits<K>::is_field);
    UniPoly<K> a = a0, b = b0;
    while (!b.is_zero()) {
        auto [q, r] = divrem_field(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return make_monic(a);
}

template <class K>
UniPoly<K> poly_gcd(const UniPoly<K>& a, const UniPoly<K>& b);

// Q[x]: route through primitive integer polynomials + subresultant PRS.
inline UniPoly<Rational> poly_gcd_rational(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    if (a.is_zero()) return b.is_zero() ? b : make_monic(b);
    if (b.is_zero()) return make_monic(a);
    UniPoly<Integer> za = primitive_integer_associate(a);
    UniPoly<Integer> zb = primitive_integer_associate(b);
    UniPoly<Integer> g = subresultant_prs_last(za, zb);
    if (g.degree() <= 0) return UniPoly<Rational>::constant(1);
    Integer c = poly_content(g);
    g = g.map_coeffs<Integer>([&](const Integer& v) { return RingTraits<Integer>::divexact(v, c); });
    return make_monic(to_rational_poly(g));
}

template <class K>
UniPoly<K> poly_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    if constexpr (std::is_same_v<K, Rational>) {
        return poly_gcd_rational(a, b);
    } else if constexpr (std::is_same_v<K, Integer>) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Integer ca = poly_content(a), cb = poly_content(b);
        UniPoly<Integer> g = subresultant_prs_last(
            a.template map_coeffs<Integer>([&](const Integer& v) { return RingTraits<Integer>::divexact(v, ca); }),
            b.template map_coeffs<Integer>([&](const Integer& v) { return RingTraits<Integer>::divexact(v, cb); }));
        if (g.degree() >= 1) {
            Integer c = poly_content(g);
            if (sgn(g.lc()) < 0) c = -c;
            g = g.map_coeffs<Integer>([&](const Integer& v) { return RingTraits<Integer>::divexact(v, c); });
        } else {
            g = UniPoly<Integer>::constant(1);
        }
        return g * RingTraits<Integer>::gcd(ca, cb);
    } else if constexpr (RingTraits<K>::is_field) {
        return gcd_field(a, b);
    } else {
        // nested polynomial ring: primitive PRS with recursive contents
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        K ca = poly_content(a), cb = poly_content(b);
        UniPoly<K> pa = a.template map_coeffs<K>([&](const K& v) { return RingTraits<K>::divexact(v, ca); });
        UniPoly<K> pb = b.template map_coeffs<K>([&](const K& v) { return RingTraits<K>::divexact(v, cb); });
        UniPoly<K> g = subresultant_prs_last(pa, pb);
        if (g.degree() >= 1) {
            K c = poly_content(g);
            g = g.template map_coeffs<K>([&](const K& v) { return RingTraits<K>::divexact(v, c); });
            if (deep_sign(g) < 0) g = -g;
        } else {
            g = UniPoly<K>::constant(RingTraits<K>::one());
        }
        return g * RingTraits<K>::gcd(ca, cb);
    }
}

template <class K>
UniPoly<K> RingTraits<UniPoly<K>>::divexact(const UniPoly<K>& a, const UniPoly<K>& b) {
    return divexact_poly(a, b);
}
template <class K>
UniPoly<K> RingTraits<UniPoly<K>>::gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    return poly_gcd(a, b);
}

// Product of the distinct irreducible factors: p / gcd(p, p'), monic.
inline UniPoly<Rational> squarefree_part(const UniPoly<Rational>& p) {
    assert(!p.is_zero());
    if (p.degree() <= 1) return make_monic(p);
    UniPoly<Rational> g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return make_monic(p);
    auto q = try_divexact(p, g);
    assert(q.has_value());
    return make_monic(*q);
}

// ---------------------------------------------------------------------------
// Evaluation into other rings, shifting, composition

// Evaluate a rational-coefficient polynomial at a point of any ring.
template <class K2>
K2 poly_eval_in(const UniPoly<Rational>& p, const K2& x) {
    K2 acc = RingTraits<K2>::zero();
    for (size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * x + RingTraits<K2>::from_rational(p.coeffs()[i]);
    return acc;
}

// Map polynomial coefficients into another ring.
template <class K2>
UniPoly<K2> poly_cast(const UniPoly<Rational>& p) {
    return p.map_coeffs<K2>([](const Rational& v) { return RingTraits<K2>::from_rational(v); });
}

// p(x + a)
template <class K>
UniPoly<K> taylor_shift(const UniPoly<K>& p, const K& a) {
    if (p.is_zero()) return p;
    std::vector<K> c(p.coeffs());
    int n = p.degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[j] = c[j] + a * c[j + 1];
    return UniPoly<K>(std::move(c));
}

// p(q(x))
template <class K>
UniPoly<K> compose(const UniPoly<K>& p, const UniPoly<K>& q) {
    UniPoly<K> acc;
    for (size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * q + UniPoly<K>::constant(p.coeffs()[i]);
    return acc;
}

// Newton interpolation through distinct nodes xs.
template <class K>
UniPoly<K> interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
    static_assert(RingTraits<K>::is_field);
    assert(xs.size() == ys.size() && !xs.empty());
    size_t n = xs.size();
    std::vector<K> dd = ys; // divided differences, computed in place
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = RingTraits<K>::divexact(dd[i] - dd[i - 1], xs[i] - xs[i - level]);
    UniPoly<K> acc = UniPoly<K>::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        UniPoly<K> lin(std::vector<K>{RingTraits<K>::zero() - xs[i], RingTraits<K>::one()});
        acc = acc * lin + UniPoly<K>::constant(dd[i]);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Sturm sequences over Q (test oracles and realness counting)

inline std::vector<UniPoly<Rational>> sturm_sequence(const UniPoly<Rational>& p) {
    std::vector<UniPoly<Rational>> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    UniPoly<Rational> d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq.back();
        auto [q, r] = divrem_field(a, b);
        (void)q;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

inline int sign_at_minus_inf(const UniPoly<Rational>& p) {
    if (p.is_zero()) return 0;
    int s = sgn(p.lc());
    return (p.degree() % 2 == 0) ? s : -s;
}
inline int sign_at_plus_inf(const UniPoly<Rational>& p) { return p.is_zero() ? 0 : sgn(p.lc()); }

namespace detail {
inline int sturm_variations(const std::vector<UniPoly<Rational>>& seq,
                            const std::function<int(const UniPoly<Rational>&)>& sig) {
    int var = 0, prev = 0;
    for (const auto& f : seq) {
        int s = sig(f);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}
} // namespace detail

// Number of distinct real roots in (a, b]; pass the whole line via infinities.
inline int sturm_count(const UniPoly<Rational>& p, const std::optional<Rational>& a,
                       const std::optional<Rational>& b) {
    auto seq = sturm_sequence(p);
    if (seq.empty()) return 0;
    auto vat = [&](const std::optional<Rational>& x, bool minus) {
        return detail::sturm_variations(seq, [&](const UniPoly<Rational>& f) {
            if (x) return sgn(f.eval(*x));
            return minus ? sign_at_minus_inf(f) : sign_at_plus_inf(f);
        });
    };
    return vat(a, true) - vat(b, false);
}

inline int sturm_count_all(const UniPoly<Rational>& p) {
    return sturm_count(p, std::nullopt, std::nullopt);
}

// ---------------------------------------------------------------------------
// Printing

inline std::string coeff_str(const Rational& v) { return to_string(v); }
inline std::string coeff_str(const Integer& v) { return v.get_str(); }
template <class K>
std::string poly_str(const UniPoly<K>& p, const std::string& var);
template <class K>
std::string coeff_str(const UniPoly<K>& p) {
    return "(" + poly_str(p, "?") + ")";
}

template <class K>
std::string poly_str(const UniPoly<K>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        K v = p.coeff(i);
        if (RingTraits<K>::is_zero(v)) continue;
        if (!out.empty()) out += " + ";
        out += coeff_str(v);
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace curvesim
