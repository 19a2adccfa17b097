#pragma once

#include "curvesim/unipoly.hpp"

#include <string>
#include <vector>

namespace curvesim {

// Real algebraic number in isolating-interval representation.
//
// Invariants: `defining` is squarefree with rational coefficients and monic;
// [lo, hi] contains exactly one real root of it. Rational values carry a
// degenerate interval lo == hi and a linear defining polynomial. For
// irrational values the endpoints are never roots, so defining(lo) and
// defining(hi) have opposite signs.
struct AlgebraicNumber {
    UniPoly<Rational> defining;
    Rational lo, hi;

    bool is_rational_val() const { return lo == hi; }
    const Rational& rational_value() const { return lo; }

    static AlgebraicNumber from_rational(const Rational& r) {
        AlgebraicNumber a;
        a.defining = UniPoly<Rational>(std::vector<Rational>{-r, 1});
        a.lo = a.hi = r;
        return a;
    }
};

// One bisection step (no-op on rational values).
void refine_step(AlgebraicNumber& a);
// Shrink until hi - lo < width.
void refine_to_width(AlgebraicNumber& a, const Rational& width);

// Exact sign of u(a). Complete: decides zero via gcd with the defining
// polynomial, otherwise refines until interval arithmetic settles.
int sign_at(const UniPoly<Rational>& u, AlgebraicNumber& a);

int sign_of(AlgebraicNumber& a);
AlgebraicNumber negate(const AlgebraicNumber& a);
bool equal(AlgebraicNumber a, AlgebraicNumber b);
// -1 / 0 / +1 for a < b / a == b / a > b.
int compare(AlgebraicNumber a, AlgebraicNumber b);

// When a factor g of a's defining polynomial is discovered (D5 split), narrow
// the defining polynomial to whichever of g, defining/g owns the root.
void restrict_defining(AlgebraicNumber& a, const UniPoly<Rational>& g);

// Decimal approximation with `digits` fractional digits.
std::string decimal(AlgebraicNumber a, int digits);

// All real roots of a squarefree polynomial, in increasing order, rational
// roots recognized exactly (degenerate intervals, linear defining). The root
// 0 is included; callers discard it where a ratio is required.
std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly<Rational>& p);

// Attempt to replace a high-degree defining polynomial by a recognized factor
// x^2 - r with rational r (covers ratios like sqrt(2)). Returns true when the
// defining polynomial was narrowed.
bool recognize_pure_quadratic(AlgebraicNumber& a);

// Number of real roots in (a, b] by Sturm count; oracle helper.
int count_real_roots(const UniPoly<Rational>& p, const std::optional<Rational>& a,
                     const std::optional<Rational>& b);

// Homogeneous integer evaluation sign of p at num/den (den > 0).
int sign_eval_rational(const UniPoly<Integer>& p, const Integer& num, const Integer& den);

} // namespace curvesim
