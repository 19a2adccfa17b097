#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvesim/reconstruct.hpp"

#include <random>

using namespace curvesim;

namespace {
UniPoly<Rational> P(std::vector<Rational> c) { return UniPoly<Rational>(std::move(c)); }
} // namespace

TEST_CASE("normalize_origin") {
    auto [x1, x2] = gen_crunode_pair();
    (void)x2;
    auto [xs, alpha] = normalize_origin(x1);
    CHECK(alpha == Rational(0)); // crunode is already regular at 0

    // cusp-like curve (t^3, t^4, t^5): x'(0) = 0 forces a shift
    RationalCurve3 cusp{{RatFun::from_poly(P({0, 0, 0, 1})), RatFun::from_poly(P({0, 0, 0, 0, 1})),
                         RatFun::from_poly(P({0, 0, 0, 0, 0, 1}))}};
    auto [cs, ca] = normalize_origin(cusp);
    CHECK(ca != Rational(0));
    auto cross = curve_cross(cs);
    Vec3<Rational> v{{*cross[0].eval(Rational(0)), *cross[1].eval(Rational(0)),
                      *cross[2].eval(Rational(0))}};
    CHECK(!v.is_zero());
}

TEST_CASE("crunode golden reconstruction: lambda=2, phi = t-1") {
    auto [x1, x2] = gen_crunode_pair();
    Moebius<Rational> phi(1, -1, 0, 1);
    RationalPolicy pol;
    auto f = recover_similarity(x1, x2, phi, Rational(2), pol);
    REQUIRE(f.has_value());
    Mat3<Rational> Qexp;
    Vec3<Rational> bexp;
    Rational lam;
    example_similarity(lam, Qexp, bexp);
    CHECK(f->Q == Qexp);
    CHECK(f->b == bexp);
    CHECK(special_orthogonal_with(f->Q, pol));
    CHECK(verify_similarity(*f, x1, x2, phi));
    CHECK(torsion_relation_with(invariants(x1), invariants(x2), phi, Rational(2), pol));

    // perturbing b must break the identity
    Similarity<Rational> bad = *f;
    bad.b[2] = bad.b[2] + 1;
    CHECK(!verify_similarity(bad, x1, x2, phi));
}

TEST_CASE("identity case") {
    auto [x1, x2] = gen_crunode_pair();
    (void)x2;
    RationalPolicy pol;
    auto f = recover_similarity(x1, x1, Moebius<Rational>(), Rational(1), pol);
    REQUIRE(f.has_value());
    CHECK(f->Q == Mat3<Rational>::identity());
    CHECK(f->b == (Vec3<Rational>{{0, 0, 0}}));
}

TEST_CASE("all four crunode tuples reconstruct and verify") {
    auto [x1, x2] = gen_crunode_pair();
    RationalPolicy pol;
    struct Tuple {
        Rational lam;
        Moebius<Rational> phi;
    };
    std::vector<Tuple> tuples = {{2, Moebius<Rational>(1, -1, 0, 1)},
                                 {2, Moebius<Rational>(-1, -1, 0, 1)},
                                 {-2, Moebius<Rational>(-1, -1, 1, 0)},
                                 {-2, Moebius<Rational>(-1, 1, 1, 0)}};
    for (const auto& [lam, phi] : tuples) {
        auto f = recover_similarity(x1, x2, phi, lam, pol);
        REQUIRE(f.has_value());
        CHECK(verify_similarity(*f, x1, x2, phi));
        CHECK(special_orthogonal_with(f->Q, pol));
        CHECK(torsion_relation_with(invariants(x1), invariants(x2), phi, lam, pol));
    }
}

TEST_CASE("d = 0 branch via the reciprocal curve") {
    auto [x1, x2] = gen_crunode_pair();
    RationalPolicy pol;
    Moebius<Rational> phi(-1, -1, 1, 0); // -(t+1)/t has d = 0
    auto f = recover_similarity(x1, x2, phi, Rational(-2), pol);
    REQUIRE(f.has_value());
    CHECK(verify_similarity(*f, x1, x2, phi));
}

TEST_CASE("random rational similarity round-trip recovers exactly") {
    std::mt19937_64 rng(20240809);
    std::uniform_int_distribution<int> d(-5, 5);
    RationalPolicy pol;
    auto base = gen_crunode_pair().first;
    int done = 0;
    while (done < 12) {
        Rational w = d(rng), x = d(rng), y = d(rng), z = d(rng);
        if (sgn(w) == 0 && sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0) continue;
        Mat3<Rational> Q = rotation_from_quaternion(w, x, y, z);
        Vec3<Rational> b{{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))}};
        std::vector<Rational> lams = {2, Rational(1, 2), -3, Rational(-5, 3)};
        Rational lam = lams[done % lams.size()];
        Rational alpha = Rational(d(rng));
        auto x2 = compose(apply_similarity(lam, Q, b, base), Moebius<Rational>::translation(alpha));
        // the Moebius map linking base to x2 is t -> t - alpha
        Moebius<Rational> phi(1, -alpha, 0, 1);
        auto f = recover_similarity(base, x2, phi, lam, pol);
        REQUIRE(f.has_value());
        CHECK(f->Q == Q);
        CHECK(f->b == b);
        CHECK(f->lambda == lam);
        CHECK(verify_similarity(*f, base, x2, phi));
        ++done;
    }
}

TEST_CASE("reconstruction over Q(sqrt2) for the power family") {
    auto [x1raw, x2] = gen_power_family(1);
    // the power curve has a triple zero at the origin: shift first
    auto [x1, shift] = normalize_origin(x1raw);
    CHECK(shift != Rational(0));
    AlgebraicNumber alpha;
    alpha.defining = P({-2, 0, 1});
    alpha.lo = 1;
    alpha.hi = 2;
    auto ctx = make_nf_context(alpha.defining);
    NFQ lam = NFQ::generator(ctx);
    EmbeddedPolicy pol{&alpha};
    auto x1k = curve_cast<NFQ>(x1);
    auto x2k = curve_cast<NFQ>(x2);
    // the map for the shifted curve is phi(t + shift), phi(t) = t/sqrt2
    Moebius<NFQ> phi(RingTraits<NFQ>::one(), RingTraits<NFQ>::zero(), RingTraits<NFQ>::zero(),
                     lam);
    Moebius<NFQ> phis = phi.compose(Moebius<NFQ>::translation(RingTraits<NFQ>::from_rational(shift)));
    auto f = recover_similarity(x1k, x2k, phis, lam, pol);
    REQUIRE(f.has_value());
    CHECK(special_orthogonal_with(f->Q, pol));
    CHECK(verify_similarity_with(*f, x1k, x2k, phis, pol));
    // homothety: Q = I, b = 0
    CHECK(f->Q == Mat3<NFQ>::identity());
    CHECK(f->b.is_zero());
}
