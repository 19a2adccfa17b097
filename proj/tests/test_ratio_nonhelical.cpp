#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvesim/ratio_nonhelical.hpp"
#include "curvesim/moebius_search.hpp"

#include <random>

using namespace curvesim;

namespace {
UniPoly<Rational> P(std::vector<Rational> c) { return UniPoly<Rational>(std::move(c)); }
} // namespace

TEST_CASE("crunode K/T bidegrees and the diagonal slice") {
    auto [x1, x2] = gen_crunode_pair();
    auto kt = build_KT(invariants(x1), invariants(x2));
    CHECK(kt.K.deg_t() == 36);
    CHECK(kt.K.deg_s() == 36);
    CHECK(kt.T.deg_t() == 8);
    CHECK(kt.T.deg_s() == 8);

    // identical curves at lambda = 1 vanish on the diagonal s = t
    auto ktd = build_KT(invariants(x1), invariants(x1));
    auto K1 = specialize_lambda(ktd.K, Rational(1));
    auto T1 = specialize_lambda(ktd.T, Rational(1));
    for (long t = -2; t <= 2; ++t) {
        Rational acc = 0;
        for (const auto& [k, v] : K1.terms())
            acc += v * rat_pow(Rational(t), k.first) * rat_pow(Rational(t), k.second);
        CHECK(acc == Rational(0));
        acc = 0;
        for (const auto& [k, v] : T1.terms())
            acc += v * rat_pow(Rational(t), k.first) * rat_pow(Rational(t), k.second);
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("helical family pair gives the paper's G_lambda") {
    auto c1 = gen_helical_alpha(1);
    auto c2 = gen_helical_alpha(-1);
    auto kt = build_KT(invariants(c1), invariants(c2));
    // T = 9 lambda t^4 + 9 s^4 + 6 lambda t^2 + 6 s^2 + lambda + 1, exactly
    LBivar expect;
    expect.add_term(4, 0, P({0, 9}));
    expect.add_term(0, 4, P({9}));
    expect.add_term(2, 0, P({0, 6}));
    expect.add_term(0, 2, P({6}));
    expect.add_term(0, 0, P({1, 1}));
    CHECK(kt.T == expect);
}

TEST_CASE("crunode candidate ratios: Lambda = lambda^2 - 4") {
    auto [x1, x2] = gen_crunode_pair();
    auto kt = build_KT(invariants(x1), invariants(x2));
    auto cand = candidate_ratios(kt);
    CHECK(cand.Lambda == P({-4, 0, 1}));
    REQUIRE(cand.roots.size() == 2);
    CHECK(cand.roots[0].rational_value() == Rational(-2));
    CHECK(cand.roots[1].rational_value() == Rational(2));
}

TEST_CASE("helical pair input raises HelicalDegeneracy") {
    auto c1 = gen_helical_alpha(1);
    auto c2 = gen_helical_alpha(-1);
    auto kt = build_KT(invariants(c1), invariants(c2));
    CHECK_THROWS_AS(candidate_ratios(kt), HelicalDegeneracy);
}

TEST_CASE("specialization gcd agrees with the direct trivariate content") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(-3, 3);
    int done = 0;
    while (done < 4) {
        // small random non-helical pair: curve and a rational similarity image
        UniPoly<Rational> n1 = P({Rational(d(rng)), 1, Rational(d(rng)), 1});
        RationalCurve3 c{{RatFun::from_poly(n1), RatFun::from_poly(P({0, 0, 1})),
                          RatFun::from_poly(P({0, Rational(d(rng)), 0, 2}))}};
        try {
            auto cls = classify(c);
            if (cls.tag != CurveClass::Tag::NonHelical) continue;
        } catch (const LineInput&) {
            continue;
        }
        Mat3<Rational> Q = rotation_from_quaternion(1, 2, 2, 0);
        Vec3<Rational> b{{1, 0, 2}};
        auto c2 = apply_similarity(Rational(-2), Q, b, c);
        auto kt = build_KT(invariants(c), invariants(c2));
        auto cand = candidate_ratios(kt);
        auto direct = lambda_content_direct(kt);
        // the two strategies agree after squarefree normalization
        CHECK(squarefree_part(direct) == cand.Lambda);
        // and both contain the planted ratio
        CHECK(sgn(cand.Lambda.eval(Rational(-2))) == 0);
        ++done;
    }
}

TEST_CASE("round-trip: planted rational ratio is a root of Lambda") {
    auto [x1, x2q] = gen_crunode_pair();
    (void)x2q;
    for (Rational lam : {Rational(3), Rational(1, 2), Rational(-5, 2)}) {
        Mat3<Rational> Q = rotation_from_quaternion(2, 1, 0, 1);
        Vec3<Rational> b{{0, 1, 1}};
        auto x2 = apply_similarity(lam, Q, b, x1);
        auto kt = build_KT(invariants(x1), invariants(x2));
        auto cand = candidate_ratios(kt);
        CHECK(sgn(cand.Lambda.eval(lam)) == 0);
    }
}

TEST_CASE("H polynomial: identically zero exactly for equal-|mu| helical pairs") {
    auto c1 = gen_helical_alpha(1);
    auto c2 = gen_helical_alpha(-1);
    CHECK(build_H(invariants(c1), invariants(c2)).is_zero());
    auto [x1, x2] = gen_crunode_pair();
    auto H = build_H(invariants(x1), invariants(x2));
    CHECK(!H.is_zero());
    // the true Moebius factor s - t + 1 (phi = t - 1) divides H
    BivarPoly<Rational> F;
    F.add_term(0, 1, 1);
    F.add_term(1, 0, -1);
    F.add_term(0, 0, 1);
    CHECK(divides_bivar(F, H));
}

TEST_CASE("H changes sign pattern under swapping the curve roles") {
    auto [x1, x2] = gen_crunode_pair();
    auto H12 = build_H(invariants(x1), invariants(x2));
    auto H21 = build_H(invariants(x2), invariants(x1));
    CHECK(H21 == -(H12.swap_vars()));
}

TEST_CASE("ratio_from_moebius on the crunode transforms") {
    auto [x1, x2] = gen_crunode_pair();
    auto i1 = invariants(x1), i2 = invariants(x2);
    auto r1 = ratio_from_moebius(Moebius<Rational>(1, -1, 0, 1), i1, i2); // t - 1
    CHECK(r1 == Rational(2));
    auto r2 = ratio_from_moebius(Moebius<Rational>(-1, -1, 1, 0), i1, i2); // -(t+1)/t
    CHECK(r2 == Rational(-2));
    auto r3 = ratio_from_moebius(Moebius<Rational>(), i1, i1); // identity on itself
    CHECK(r3 == Rational(1));
    // non-factor Moebius map gives a non-constant quotient
    auto r4 = ratio_from_moebius(Moebius<Rational>(1, 5, 0, 1), i1, i2);
    CHECK(!r4.has_value());
}
