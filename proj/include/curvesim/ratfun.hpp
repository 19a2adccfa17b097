#pragma once

#include "curvesim/unipoly.hpp"

#include <array>
#include <stdexcept>

namespace curvesim {

// Rational function num/den over a field K, kept coprime with monic
// denominator.
template <class K>
struct RatFunT {
    UniPoly<K> num, den;

    RatFunT() : num(), den(UniPoly<K>::constant(RingTraits<K>::one())) {}

    static RatFunT make(UniPoly<K> n, UniPoly<K> d) {
        if (d.is_zero()) throw std::invalid_argument("rational function with zero denominator");
        RatFunT f;
        if (n.is_zero()) {
            f.num = UniPoly<K>{};
            f.den = UniPoly<K>::constant(RingTraits<K>::one());
            return f;
        }
        UniPoly<K> g = poly_gcd(n, d);
        if (g.degree() >= 1) {
            n = divexact_poly(n, g);
            d = divexact_poly(d, g);
        }
        K inv_lc = RingTraits<K>::divexact(RingTraits<K>::one(), d.lc());
        f.num = n * inv_lc;
        f.den = d * inv_lc;
        return f;
    }
    static RatFunT from_poly(UniPoly<K> n) {
        RatFunT f;
        f.num = std::move(n);
        return f;
    }
    static RatFunT constant(const K& v) { return from_poly(UniPoly<K>::constant(v)); }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }
    int degree() const { return std::max(num.degree(), den.degree()); } // curve-degree convention

    friend RatFunT operator+(const RatFunT& x, const RatFunT& y) {
        return make(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    friend RatFunT operator-(const RatFunT& x, const RatFunT& y) {
        return make(x.num * y.den - y.num * x.den, x.den * y.den);
    }
    RatFunT operator-() const {
        RatFunT f = *this;
        f.num = -f.num;
        return f;
    }
    friend RatFunT operator*(const RatFunT& x, const RatFunT& y) {
        return make(x.num * y.num, x.den * y.den);
    }
    friend RatFunT operator/(const RatFunT& x, const RatFunT& y) {
        if (y.is_zero()) throw std::invalid_argument("division by zero rational function");
        return make(x.num * y.den, x.den * y.num);
    }
    friend RatFunT operator*(const RatFunT& x, const K& c) {
        return make(x.num * c, x.den);
    }
    friend bool operator==(const RatFunT& x, const RatFunT& y) {
        return x.num * y.den == y.num * x.den;
    }
    friend bool operator!=(const RatFunT& x, const RatFunT& y) { return !(x == y); }

    RatFunT derivative() const {
        return make(num.derivative() * den - num * den.derivative(), den * den);
    }

    // evaluation; std::nullopt at a pole
    std::optional<K> eval(const K& x) const {
        K d = den.eval(x);
        if (RingTraits<K>::is_zero(d)) return std::nullopt;
        return RingTraits<K>::divexact(num.eval(x), d);
    }

    // value at infinity: 0 if deg num < deg den, lc ratio if equal, nullopt if pole
    std::optional<K> eval_at_infinity() const {
        if (is_zero()) return RingTraits<K>::zero();
        if (num.degree() < den.degree()) return RingTraits<K>::zero();
        if (num.degree() == den.degree()) return RingTraits<K>::divexact(num.lc(), den.lc());
        return std::nullopt;
    }

    RatFunT pow(unsigned long e) const {
        RatFunT r = constant(RingTraits<K>::one());
        RatFunT b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

using RatFun = RatFunT<Rational>;

template <class K>
RatFunT<K> ratfun_cast(const RatFun& f) {
    return RatFunT<K>::make(poly_cast<K>(f.num), poly_cast<K>(f.den));
}

} // namespace curvesim
