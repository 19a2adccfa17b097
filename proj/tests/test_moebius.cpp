#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvesim/moebius.hpp"
#include "curvesim/numberfield.hpp"

using namespace curvesim;

namespace {
UniPoly<Rational> P(std::vector<Rational> c) { return UniPoly<Rational>(std::move(c)); }
} // namespace

TEST_CASE("Moebius basics") {
    Moebius<Rational> phi(1, -1, 0, 1); // t - 1
    CHECK(phi.delta() == Rational(1));
    CHECK(phi.valid());
    CHECK(*phi.apply(Rational(3)) == Rational(2));
    Moebius<Rational> inv = phi.inverse();
    CHECK(phi.compose(inv).is_identity());
    CHECK(inv.compose(phi).is_identity());

    Moebius<Rational> psi(-1, -1, 1, 0); // -(t+1)/t
    CHECK(*psi.apply(Rational(1)) == Rational(-2));
    CHECK(!psi.apply(Rational(0)).has_value());
    CHECK(psi.compose(psi.inverse()).is_identity());
}

TEST_CASE("normalization and projective equality") {
    Moebius<Rational> a(2, -2, 0, 2);
    Moebius<Rational> b(1, -1, 0, 1);
    CHECK(a == b);
    auto n = a.normalized();
    CHECK(n.a == Rational(1));
    CHECK(n.b == Rational(-1));
}

TEST_CASE("Moebius-like polynomial F(t, phi(t)) vanishes") {
    Moebius<Rational> phi(2, 1, 1, 3); // (2t+1)/(t+3)
    BivarPoly<Rational> F = phi.moebius_like_poly();
    // substitute s = phi(t): F(t, phi(t)) * (t+3) == 0
    for (long t = -3; t <= 3; ++t) {
        if (t == -3) continue;
        Rational tv(t);
        Rational sv = *phi.apply(tv);
        Rational acc = 0;
        for (const auto& [k, v] : F.terms())
            acc += v * rat_pow(tv, k.first) * rat_pow(sv, k.second);
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("polynomial composition with a Moebius map") {
    UniPoly<Rational> p = P({1, 0, 1}); // t^2 + 1
    Moebius<Rational> phi(1, -1, 0, 1);
    CHECK(compose_poly_moebius(p, phi) == P({2, -2, 1})); // (t-1)^2 + 1
    RatFun f = RatFun::make(P({0, 1}), P({1, 0, 1}));
    auto g = compose_ratfun_moebius(f, phi); // (t-1)/((t-1)^2+1)
    CHECK(g == RatFun::make(P({-1, 1}), P({2, -2, 1})));
    // inversion map t -> 1/t (c != 0, degree drop handling)
    Moebius<Rational> invmap(0, 1, 1, 0);
    auto h = compose_ratfun_moebius(f, invmap); // (1/t)/((1/t)^2+1) = t/(1+t^2)
    CHECK(h == f);
}

TEST_CASE("composition over a number field") {
    auto ctx = make_nf_context(P({-2, 0, 1}));
    NFQ s2 = NFQ::generator(ctx);
    Moebius<NFQ> phi(inverse(s2), RingTraits<NFQ>::zero(), RingTraits<NFQ>::zero(),
                     RingTraits<NFQ>::one()); // t / sqrt2
    auto r = phi.as_ratfun();
    CHECK(!r.is_zero());
    CHECK(phi.valid());
    auto idm = phi.compose(phi.inverse());
    CHECK(idm.is_identity());
}
