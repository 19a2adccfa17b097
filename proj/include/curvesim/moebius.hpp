#pragma once

#include "curvesim/bivar.hpp"
#include "curvesim/ratfun.hpp"

namespace curvesim {

// phi(t) = (a t + b) / (c t + d), ad - bc != 0.
template <class K>
struct Moebius {
    K a, b, c, d;

    Moebius()
        : a(RingTraits<K>::one()), b(RingTraits<K>::zero()), c(RingTraits<K>::zero()),
          d(RingTraits<K>::one()) {}
    Moebius(K a_, K b_, K c_, K d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Moebius identity() { return Moebius(); }
    static Moebius translation(const K& alpha) {
        return Moebius(RingTraits<K>::one(), alpha, RingTraits<K>::zero(), RingTraits<K>::one());
    }

    K delta() const { return a * d - b * c; }
    bool valid() const { return !RingTraits<K>::is_zero(delta()); }

    bool is_identity() const {
        return RingTraits<K>::is_zero(c) && RingTraits<K>::is_zero(b) &&
               RingTraits<K>::is_zero(a - d);
    }

    // scale so the first nonzero coefficient of (a, b, c, d) is 1
    Moebius normalized() const {
        const K* lead = nullptr;
        for (const K* p : {&a, &b, &c, &d})
            if (!RingTraits<K>::is_zero(*p)) {
                lead = p;
                break;
            }
        assert(lead);
        K inv = RingTraits<K>::divexact(RingTraits<K>::one(), *lead);
        return Moebius(a * inv, b * inv, c * inv, d * inv);
    }

    // (this o g)(t) = this(g(t))
    Moebius compose(const Moebius& g) const {
        return Moebius(a * g.a + b * g.c, a * g.b + b * g.d, c * g.a + d * g.c, c * g.b + d * g.d);
    }
    Moebius inverse() const {
        return Moebius(d, RingTraits<K>::zero() - b, RingTraits<K>::zero() - c, a);
    }

    std::optional<K> apply(const K& t) const {
        K denom = c * t + d;
        if (RingTraits<K>::is_zero(denom)) return std::nullopt;
        return RingTraits<K>::divexact(a * t + b, denom);
    }

    RatFunT<K> as_ratfun() const {
        return RatFunT<K>::make(UniPoly<K>(std::vector<K>{b, a}), UniPoly<K>(std::vector<K>{d, c}));
    }

    // Moebius-like polynomial F(t,s) = (c t + d) s - (a t + b)
    BivarPoly<K> moebius_like_poly() const {
        BivarPoly<K> F;
        F.add_term(1, 1, c);
        F.add_term(0, 1, d);
        F.add_term(1, 0, RingTraits<K>::zero() - a);
        F.add_term(0, 0, RingTraits<K>::zero() - b);
        return F;
    }

    friend bool operator==(const Moebius& x, const Moebius& y) {
        // projective equality
        return RingTraits<K>::is_zero(x.a * y.b - y.a * x.b) &&
               RingTraits<K>::is_zero(x.a * y.c - y.a * x.c) &&
               RingTraits<K>::is_zero(x.a * y.d - y.a * x.d) &&
               RingTraits<K>::is_zero(x.b * y.c - y.b * x.c) &&
               RingTraits<K>::is_zero(x.b * y.d - y.b * x.d) &&
               RingTraits<K>::is_zero(x.c * y.d - y.c * x.d);
    }
};

// p(phi(t)) written over the common denominator (c t + d)^deg(p).
template <class K>
UniPoly<K> compose_poly_moebius(const UniPoly<K>& p, const Moebius<K>& phi) {
    int n = p.degree();
    if (n <= 0) return p;
    UniPoly<K> at_b(std::vector<K>{phi.b, phi.a});
    UniPoly<K> ct_d(std::vector<K>{phi.d, phi.c});
    std::vector<UniPoly<K>> up(n + 1), dn(n + 1);
    up[0] = dn[0] = UniPoly<K>::constant(RingTraits<K>::one());
    for (int i = 1; i <= n; ++i) {
        up[i] = up[i - 1] * at_b;
        dn[i] = dn[i - 1] * ct_d;
    }
    UniPoly<K> acc;
    for (int i = 0; i <= n; ++i) {
        if (RingTraits<K>::is_zero(p.coeff(i))) continue;
        acc = acc + up[i] * dn[n - i] * p.coeff(i);
    }
    return acc;
}

// f(phi(t)) as a rational function.
template <class K>
RatFunT<K> compose_ratfun_moebius(const RatFunT<K>& f, const Moebius<K>& phi) {
    UniPoly<K> ct_d(std::vector<K>{phi.d, phi.c});
    UniPoly<K> pn = compose_poly_moebius(f.num, phi);
    UniPoly<K> pd = compose_poly_moebius(f.den, phi);
    int dn = f.num.degree() < 0 ? 0 : f.num.degree();
    int dd = f.den.degree();
    // align the (ct+d) powers of numerator and denominator
    if (dn < dd)
        pn = pn * ring_pow(ct_d, (unsigned long)(dd - dn));
    else if (dd < dn)
        pd = pd * ring_pow(ct_d, (unsigned long)(dn - dd));
    return RatFunT<K>::make(pn, pd);
}

template <class K>
Moebius<K> moebius_cast(const Moebius<Rational>& m) {
    return Moebius<K>(RingTraits<K>::from_rational(m.a), RingTraits<K>::from_rational(m.b),
                      RingTraits<K>::from_rational(m.c), RingTraits<K>::from_rational(m.d));
}

} // namespace curvesim
