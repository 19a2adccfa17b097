#include "curvesim/curves.hpp"

namespace curvesim {

namespace {

UniPoly<Rational> upoly(std::vector<Rational> c) { return UniPoly<Rational>(std::move(c)); }

Rational binom(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace

RationalCurve3 gen_daisy(int j) {
    assert(j >= 0);
    RatFun u = RatFun::make(upoly({1, 0, -1}), upoly({1, 0, 1}));  // (1-t^2)/(1+t^2)
    RatFun v = RatFun::make(upoly({0, 2}), upoly({1, 0, 1}));      // 2t/(1+t^2)
    RatFun sum = RatFun::constant(0);
    for (int i = 0; i <= j; ++i) {
        Rational sign = (i % 2 == 0) ? 1 : -1;
        sum = sum + u.pow(2 * j - 2 * i) * v.pow(2 * i) * (binom(2 * j, 2 * i) * sign);
    }
    int m = 4 * j + 4;
    UniPoly<Rational> tm = UniPoly<Rational>::monomial(1, m);
    UniPoly<Rational> one = upoly({1});
    RatFun z = RatFun::make(one - tm, one + tm);
    return RationalCurve3{{u * sum, v * sum, z}};
}

std::pair<RationalCurve3, RationalCurve3> gen_power_family(int n) {
    assert(n >= 1);
    UniPoly<Rational> den1 = UniPoly<Rational>::monomial(1, 2 * n) + upoly({1});
    RationalCurve3 x1{{RatFun::make(UniPoly<Rational>::monomial(1, 2 * n + 1), den1),
                       RatFun::make(UniPoly<Rational>::monomial(1, 2 * n + 3), den1),
                       RatFun::make(UniPoly<Rational>::monomial(1, 2 * n + 5), den1)}};
    Rational p2n = rat_pow(2, n);
    UniPoly<Rational> den2 = UniPoly<Rational>::monomial(p2n, 2 * n) + upoly({1});
    RationalCurve3 x2{
        {RatFun::make(UniPoly<Rational>::monomial(rat_pow(2, n + 1), 2 * n + 1), den2),
         RatFun::make(UniPoly<Rational>::monomial(rat_pow(2, n + 2), 2 * n + 3), den2),
         RatFun::make(UniPoly<Rational>::monomial(rat_pow(2, n + 3), 2 * n + 5), den2)}};
    return {x1, x2};
}

RationalCurve3 gen_helical_alpha(const Rational& alpha) {
    // (-t^3/3 + a^2 t, 2t^3/3 + a t^2, 2t^3/3 - a t^2)
    return RationalCurve3{{RatFun::from_poly(upoly({0, alpha * alpha, 0, Rational(-1, 3)})),
                           RatFun::from_poly(upoly({0, 0, alpha, Rational(2, 3)})),
                           RatFun::from_poly(upoly({0, 0, -alpha, Rational(2, 3)}))}};
}

std::pair<RationalCurve3, RationalCurve3> gen_crunode_pair() {
    UniPoly<Rational> den = upoly({1, 0, 0, 0, 1});
    RationalCurve3 x1{{RatFun::make(upoly({0, 1}), den), RatFun::make(upoly({0, 0, 1}), den),
                       RatFun::make(upoly({0, 0, 0, 1}), den)}};
    Rational lambda;
    Mat3<Rational> Q;
    Vec3<Rational> b;
    example_similarity(lambda, Q, b);
    RationalCurve3 fx1 = apply_similarity(lambda, Q, b, x1);
    RationalCurve3 x2 = compose(fx1, Moebius<Rational>::translation(1)); // f o x1 o (t+1)
    return {x1, x2};
}

std::pair<RationalCurve3, RationalCurve3> gen_quint_pair() {
    RationalCurve3 x1{{RatFun::from_poly(upoly({0, 0, 0, Rational(1, 4), Rational(3, 8), Rational(3, 4)})),
                       RatFun::from_poly(upoly({0, 0, 0, 0, 1, Rational(4, 5)})),
                       RatFun::from_poly(upoly({0, 0, 0, Rational(1, 3), Rational(1, 2), Rational(-3, 5)}))}};
    RationalCurve3 x2{{RatFun::from_poly(upoly({0, 0, 0, 1, Rational(3, 4), Rational(3, 2)})),
                       RatFun::from_poly(upoly({0, 0, 0, 0, 3, Rational(6, 5)})),
                       RatFun::from_poly(upoly({0, 0, 0, Rational(4, 3), 1, Rational(-8, 5)}))}};
    return {x1, x2};
}

} // namespace curvesim
