#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvesim/curves.hpp"

#include <random>

using namespace curvesim;

namespace {
UniPoly<Rational> P(std::vector<Rational> c) { return UniPoly<Rational>(std::move(c)); }
RatFun RF(std::vector<Rational> n, std::vector<Rational> d = {1}) {
    return RatFun::make(P(std::move(n)), P(std::move(d)));
}
} // namespace

TEST_CASE("componentwise derivatives") {
    RationalCurve3 c{{RF({0, 1}), RF({0, 0, 1}), RF({0, 0, 0, 1})}}; // (t, t^2, t^3)
    auto d = derivative(c, 1);
    CHECK(d[0] == RF({1}));
    CHECK(d[1] == RF({0, 2}));
    CHECK(d[2] == RF({0, 0, 3}));
    auto d2 = derivative(RationalCurve3{{RF({0, 0, 0, 1}), RF({0}), RF({0})}}, 2);
    CHECK(d2[0] == RF({0, 6}));
    // quotient rule: d/dt t/(t^2+1) = (1 - t^2)/(t^2+1)^2
    RationalCurve3 q{{RF({0, 1}, {1, 0, 1}), RF({0}), RF({0})}};
    auto dq = derivative(q, 1);
    CHECK(dq[0] == RatFun::make(P({1, 0, -1}), P({1, 0, 1}) * P({1, 0, 1})));
}

TEST_CASE("crunode invariants have the paper degrees") {
    auto [x1, x2] = gen_crunode_pair();
    auto i1 = invariants(x1);
    CHECK(i1.A.degree() == 36);
    CHECK(i1.B.degree() == 36);
    CHECK(i1.C.degree() == 8);
    CHECK(i1.D.degree() == 8);
    auto i2 = invariants(x2);
    CHECK(i2.A.degree() == 36);
    CHECK(i2.C.degree() == 8);
}

TEST_CASE("helical family invariants") {
    // x_a with a=1: tau = 2/(1+3t^2)^2 and kappa^2 = 8/(1+3t^2)^4
    auto c = gen_helical_alpha(1);
    auto inv = invariants(c);
    UniPoly<Rational> den = P({1, 0, 3}) * P({1, 0, 3});
    CHECK(RatFun::make(inv.C, inv.D) == RatFun::make(P({2}), den));
    CHECK(RatFun::make(inv.A, inv.B) == RatFun::make(P({8}), den * den));
}

TEST_CASE("unit circle lift: kappa^2 = 1, tau = 0") {
    // (u, v, 0) with u = (1-t^2)/(1+t^2), v = 2t/(1+t^2)
    RationalCurve3 c{{RF({1, 0, -1}, {1, 0, 1}), RF({0, 2}, {1, 0, 1}), RF({0})}};
    auto inv = invariants(c);
    CHECK(inv.C.is_zero());
    CHECK(RatFun::make(inv.A, inv.B) == RatFun::constant(1));
}

TEST_CASE("classification") {
    RationalCurve3 line{{RF({0, 1}), RF({0, 2}), RF({0, 3})}};
    CHECK(classify(line).tag == CurveClass::Tag::Line);

    RationalCurve3 circ{{RF({1, 0, -1}, {1, 0, 1}), RF({0, 2}, {1, 0, 1}), RF({0})}};
    CHECK(classify(circ).tag == CurveClass::Tag::Circle);

    RationalCurve3 planar{{RF({0, 1}), RF({0, 0, 1}), RF({0})}};
    CHECK(classify(planar).tag == CurveClass::Tag::PlanarOther);

    auto hel = classify(gen_helical_alpha(1));
    CHECK(hel.tag == CurveClass::Tag::Helical);
    CHECK(hel.mu_squared == Rational(2));
    CHECK(!hel.mu.has_value()); // sqrt(2) is irrational
    CHECK(hel.mu_sign == 1);

    auto helneg = classify(gen_helical_alpha(-1));
    CHECK(helneg.mu_squared == Rational(2));
    CHECK(helneg.mu_sign == -1);

    auto [q1, q2] = gen_quint_pair();
    auto c1 = classify(q1), c2 = classify(q2);
    CHECK(c1.tag == CurveClass::Tag::Helical);
    CHECK(c1.mu == Rational(-4, 3));
    CHECK(c2.mu == Rational(-4, 3));

    CHECK(classify(gen_daisy(1)).tag == CurveClass::Tag::NonHelical);
}

TEST_CASE("daisy generator") {
    auto d0 = gen_daisy(0);
    CHECK(d0.degree() == 4);
    // j=0: (u, v, (1-t^4)/(1+t^4))
    CHECK(d0[0] == RF({1, 0, -1}, {1, 0, 1}));
    CHECK(d0[1] == RF({0, 2}, {1, 0, 1}));
    CHECK(d0[2] == RF({1, 0, 0, 0, -1}, {1, 0, 0, 0, 1}));
    CHECK(gen_daisy(1).degree() == 8);
    CHECK(gen_daisy(2).degree() == 12);
    for (int j = 0; j <= 2; ++j) {
        auto z = gen_daisy(j)[2].eval(Rational(0));
        REQUIRE(z.has_value());
        CHECK(*z == Rational(1));
    }
}

TEST_CASE("power family generator") {
    auto [a1, a2] = gen_power_family(1);
    CHECK(a1.degree() == 7);
    CHECK(a2.degree() == 7);
    // leading coefficient 2^(n+1) in the unit-constant-denominator form
    CHECK(a2[0].num.lc() / a2[0].den.coeff(0) == Rational(4));
    auto [b1, b2] = gen_power_family(2);
    CHECK(b1.degree() == 9);
    CHECK(b2[0].num.lc() / b2[0].den.coeff(0) == Rational(8));
}

TEST_CASE("similarity transformation law for the invariants") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<RationalCurve3> curves = {gen_crunode_pair().first, gen_helical_alpha(1),
                                          gen_daisy(0)};
    std::vector<Rational> lambdas = {2, Rational(-1, 2), 3};
    for (size_t k = 0; k < curves.size(); ++k) {
        const auto& c = curves[k];
        Rational lambda = lambdas[k];
        Rational w = d(rng), x = d(rng), y = d(rng), z = d(rng);
        if (sgn(w) == 0 && sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0) w = 1;
        Mat3<Rational> Q = rotation_from_quaternion(w, x, y, z);
        Vec3<Rational> b{{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))}};
        auto fc = apply_similarity(lambda, Q, b, c);

        auto i = invariants(c);
        auto fi = invariants(fc);
        // kappa_f^2 = kappa^2 / lambda^2 and tau_f = tau / lambda
        CHECK(RatFun::make(fi.A, fi.B) ==
              RatFun::make(i.A, i.B) * (1 / (lambda * lambda)));
        CHECK(RatFun::make(fi.C, fi.D) == RatFun::make(i.C, i.D) * (1 / lambda));
        // classification is similarity-invariant
        CHECK(classify(fc).tag == classify(c).tag);
    }
}

TEST_CASE("reparametrization law: invariants commute with Moebius maps") {
    auto c = gen_crunode_pair().first;
    std::vector<Moebius<Rational>> phis = {Moebius<Rational>(1, -1, 0, 1),
                                           Moebius<Rational>(0, 1, 1, 0),
                                           Moebius<Rational>(2, 1, 1, 3)};
    auto i = invariants(c);
    for (const auto& phi : phis) {
        auto cp = compose(c, phi);
        auto ip = invariants(cp);
        RatFun k2 = RatFun::make(i.A, i.B);
        RatFun tau = RatFun::make(i.C, i.D);
        CHECK(RatFun::make(ip.A, ip.B) == compose_ratfun_moebius(k2, phi));
        CHECK(RatFun::make(ip.C, ip.D) == compose_ratfun_moebius(tau, phi));
    }
}

TEST_CASE("helical mu transforms by sign of lambda") {
    auto c = gen_helical_alpha(Rational(1, 2));
    auto base = classify(c);
    REQUIRE(base.tag == CurveClass::Tag::Helical);
    Mat3<Rational> Q = rotation_from_quaternion(1, 2, 0, 2);
    Vec3<Rational> b{{1, 0, -1}};
    auto plus = classify(apply_similarity(Rational(3), Q, b, c));
    auto minus = classify(apply_similarity(Rational(-3), Q, b, c));
    CHECK(plus.mu_squared == base.mu_squared);
    CHECK(minus.mu_squared == base.mu_squared);
    CHECK(plus.mu_sign == base.mu_sign);
    CHECK(minus.mu_sign == -base.mu_sign);
}

TEST_CASE("line input rejected by invariants") {
    RationalCurve3 line{{RF({0, 1}), RF({1, 2}), RF({5, -1})}};
    CHECK_THROWS_AS(invariants(line), LineInput);
}
