#include "curvesim/curves.hpp"

namespace curvesim {

RationalCurve3 make_curve(
    const std::array<std::pair<UniPoly<Rational>, UniPoly<Rational>>, 3>& comps) {
    RationalCurve3 c;
    for (int i = 0; i < 3; ++i) c.x[i] = RatFun::make(comps[i].first, comps[i].second);
    return c;
}

RationalCurve3 derivative(const RationalCurve3& c, int order) {
    assert(order >= 1 && order <= 3);
    RationalCurve3 r = c;
    for (int k = 0; k < order; ++k) r = r.derivative();
    return r;
}

std::array<RatFun, 3> curve_cross(const RationalCurve3& c) {
    RationalCurve3 d1 = c.derivative();
    RationalCurve3 d2 = d1.derivative();
    return {d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2],
            d1[0] * d2[1] - d1[1] * d2[0]};
}

DifferentialInvariants invariants(const RationalCurve3& c) {
    RationalCurve3 d1 = c.derivative();
    RationalCurve3 d2 = d1.derivative();
    RationalCurve3 d3 = d2.derivative();
    std::array<RatFun, 3> cr = {d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2],
                                d1[0] * d2[1] - d1[1] * d2[0]};
    if (cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero()) throw LineInput();

    RatFun n2cross = cr[0] * cr[0] + cr[1] * cr[1] + cr[2] * cr[2];
    RatFun n2d1 = d1[0] * d1[0] + d1[1] * d1[1] + d1[2] * d1[2];
    RatFun kappa2 = n2cross / (n2d1 * n2d1 * n2d1);
    RatFun tau = (cr[0] * d3[0] + cr[1] * d3[1] + cr[2] * d3[2]) / n2cross;

    DifferentialInvariants inv;
    inv.A = kappa2.num;
    inv.B = kappa2.den;
    inv.C = tau.num;
    inv.D = tau.den;
    return inv;
}

namespace {

// exact proportionality test R/S == const for polynomials R, S (S != 0)
std::optional<Rational> constant_ratio(const UniPoly<Rational>& R, const UniPoly<Rational>& S) {
    if (R.is_zero()) return Rational(0);
    if (R.degree() != S.degree()) return std::nullopt;
    Rational r = R.lc() / S.lc();
    return (R == S * r) ? std::optional<Rational>(r) : std::nullopt;
}

} // namespace

CurveClass classify(const RationalCurve3& c) {
    CurveClass cls;
    std::array<RatFun, 3> cr = curve_cross(c);
    if (cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero()) {
        cls.tag = CurveClass::Tag::Line;
        return cls;
    }
    DifferentialInvariants inv = invariants(c);
    if (inv.C.is_zero()) {
        // planar: tau == 0; circle iff kappa^2 is a nonzero constant
        bool const_kappa = inv.A.degree() == 0 && inv.B.degree() == 0 && !inv.A.is_zero();
        cls.tag = const_kappa ? CurveClass::Tag::Circle : CurveClass::Tag::PlanarOther;
        return cls;
    }
    // mu^2 = kappa^2 / tau^2 = (A D^2) / (B C^2)
    UniPoly<Rational> R = inv.A * inv.D * inv.D;
    UniPoly<Rational> S = inv.B * inv.C * inv.C;
    auto ratio = constant_ratio(R, S);
    if (!ratio) {
        cls.tag = CurveClass::Tag::NonHelical;
        return cls;
    }
    cls.tag = CurveClass::Tag::Helical;
    cls.mu_squared = *ratio;
    // sign of mu = sign of tau (kappa >= 0), constant along a helical curve
    for (long k = 0;; k = k > 0 ? -k : -k + 1) {
        Rational t(k);
        Rational cv = inv.C.eval(t), dv = inv.D.eval(t);
        if (sgn(cv) != 0 && sgn(dv) != 0) {
            cls.mu_sign = sgn(cv) * sgn(dv);
            break;
        }
    }
    if (auto root = rat_sqrt_exact(*ratio))
        cls.mu = *root * cls.mu_sign;
    return cls;
}

void example_similarity(Rational& lambda, Mat3<Rational>& Q, Vec3<Rational>& b) {
    lambda = 2;
    Q = Mat3<Rational>::identity();
    Q.set(0, 0, Rational(3, 5));
    Q.set(0, 1, Rational(4, 5));
    Q.set(1, 0, Rational(-4, 5));
    Q.set(1, 1, Rational(3, 5));
    Q.set(2, 2, 1);
    b = Vec3<Rational>{{0, 0, 2}};
}

} // namespace curvesim
