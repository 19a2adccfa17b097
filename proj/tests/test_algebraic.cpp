#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvesim/algebraic.hpp"
#include "oracles.hpp"

#include <random>

using namespace curvesim;

namespace {
UniPoly<Rational> P(std::vector<Rational> c) { return UniPoly<Rational>(std::move(c)); }
} // namespace

TEST_CASE("isolate: x^2 - 4 gives -2 and 2 exactly") {
    auto roots = isolate_real_roots(P({-4, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].is_rational_val());
    CHECK(roots[0].rational_value() == Rational(-2));
    CHECK(roots[1].is_rational_val());
    CHECK(roots[1].rational_value() == Rational(2));
}

TEST_CASE("isolate: x(x+1) gives -1 and 0") {
    auto roots = isolate_real_roots(P({0, 1}) * P({1, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].rational_value() == Rational(-1));
    CHECK(roots[1].rational_value() == Rational(0));
}

TEST_CASE("isolate: x^2 - 2 gives irrational pair with correct intervals") {
    auto roots = isolate_real_roots(P({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    for (auto& r : roots) CHECK(!r.is_rational_val());
    CHECK(roots[0].lo >= Rational(-2));
    CHECK(roots[0].hi <= Rational(-1));
    CHECK(roots[1].lo >= Rational(1));
    CHECK(roots[1].hi <= Rational(2));
    // defining evaluates with opposite signs at the endpoints
    for (auto& r : roots) CHECK(sgn(r.defining.eval(r.lo)) * sgn(r.defining.eval(r.hi)) < 0);
}

TEST_CASE("isolate: non-dyadic rational roots recognized (x - 1/3)(x - 1/7)") {
    auto p = P({Rational(-1, 3), 1}) * P({Rational(-1, 7), 1}) * P({-3, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].rational_value() == Rational(1, 7));
    CHECK(roots[1].rational_value() == Rational(1, 3));
    CHECK(roots[2].rational_value() == Rational(3));
}

TEST_CASE("isolation count matches Sturm on random squarefree polys") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 120) {
        auto p = oracles::random_poly(rng, 2 + (int)(rng() % 6), 10);
        if (p.degree() < 1) continue;
        auto sf = squarefree_part(p);
        if (sf.degree() < 1) continue;
        auto roots = isolate_real_roots(sf);
        CHECK((int)roots.size() == sturm_count_all(sf));
        for (size_t i = 1; i < roots.size(); ++i) CHECK(compare(roots[i - 1], roots[i]) < 0);
        ++done;
    }
}

TEST_CASE("sign_at and sign_of") {
    auto roots = isolate_real_roots(P({-2, 0, 1}));
    AlgebraicNumber sqrt2 = roots[1];
    CHECK(sign_of(sqrt2) == 1);
    auto u = P({-1, 1}); // x - 1: positive at sqrt2
    CHECK(sign_at(u, sqrt2) == 1);
    auto v = P({-3, 0, 1}); // x^2-3: sqrt2^2-3 < 0
    CHECK(sign_at(v, sqrt2) == -1);
    auto w = P({-2, 0, 1});
    CHECK(sign_at(w, sqrt2) == 0);
    AlgebraicNumber msqrt2 = negate(sqrt2);
    CHECK(sign_of(msqrt2) == -1);
    CHECK(compare(msqrt2, sqrt2) < 0);
    CHECK(equal(negate(msqrt2), sqrt2));
}

TEST_CASE("restrict_defining picks the factor owning the root") {
    // (x^2-2)(x-3): isolate sqrt(2), then split off (x-3)
    auto p = P({-2, 0, 1}) * P({-3, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    AlgebraicNumber r = roots[1]; // sqrt(2) sits between -sqrt2 and 3
    CHECK(!r.is_rational_val());
    restrict_defining(r, P({-3, 1}));
    CHECK(r.defining == make_monic(P({-2, 0, 1})));
    AlgebraicNumber q = roots[1];
    restrict_defining(q, P({-2, 0, 1}));
    CHECK(q.defining == make_monic(P({-2, 0, 1})));
}

TEST_CASE("pure quadratic recognition inside a larger defining polynomial") {
    // (x^2 - 2) * (x^3 - x - 5)
    auto p = P({-2, 0, 1}) * P({-5, -1, 0, 1});
    auto roots = isolate_real_roots(p);
    bool found = false;
    for (auto r : roots) {
        if (r.is_rational_val()) continue;
        AlgebraicNumber c = r;
        if (recognize_pure_quadratic(c)) {
            CHECK(c.defining == P({-2, 0, 1}));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("decimal output") {
    auto roots = isolate_real_roots(P({-2, 0, 1}));
    AlgebraicNumber sqrt2 = roots[1];
    CHECK(decimal(sqrt2, 6) == "1.414214");
    CHECK(decimal(AlgebraicNumber::from_rational(Rational(-1, 16)), 4) == "-0.0625");
}

TEST_CASE("grid sweep oracle agrees on controlled roots") {
    // roots at -3/2, 1/4, 2
    auto p = P({Rational(3, 2), 1}) * P({Rational(-1, 4), 1}) * P({-2, 1});
    auto roots = isolate_real_roots(p);
    CHECK((int)roots.size() == oracles::count_roots_grid(p, 4, 8));
}
