#pragma once

#include "curvesim/linalg.hpp"
#include "curvesim/moebius.hpp"
#include "curvesim/ratfun.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace curvesim {

struct LineInput : std::runtime_error {
    LineInput() : std::runtime_error("curvature frame undefined: input parametrizes a line") {}
};

// Space curve given by three rational-function components.
template <class K>
struct Curve3T {
    std::array<RatFunT<K>, 3> x;

    const RatFunT<K>& operator[](int i) const { return x[i]; }
    RatFunT<K>& operator[](int i) { return x[i]; }

    int degree() const { return std::max({x[0].degree(), x[1].degree(), x[2].degree()}); }

    Curve3T derivative() const {
        return Curve3T{{x[0].derivative(), x[1].derivative(), x[2].derivative()}};
    }

    std::optional<Vec3<K>> eval(const K& t) const {
        Vec3<K> v;
        for (int i = 0; i < 3; ++i) {
            auto r = x[i].eval(t);
            if (!r) return std::nullopt;
            v[i] = *r;
        }
        return v;
    }

    friend Curve3T compose(const Curve3T& c, const Moebius<K>& phi) {
        return Curve3T{{compose_ratfun_moebius(c.x[0], phi), compose_ratfun_moebius(c.x[1], phi),
                        compose_ratfun_moebius(c.x[2], phi)}};
    }
};

using RationalCurve3 = Curve3T<Rational>;

template <class K>
Curve3T<K> curve_cast(const RationalCurve3& c) {
    return Curve3T<K>{{ratfun_cast<K>(c.x[0]), ratfun_cast<K>(c.x[1]), ratfun_cast<K>(c.x[2])}};
}

// f(x) = lambda Q x + b applied to every point of the curve.
template <class K>
Curve3T<K> apply_similarity(const K& lambda, const Mat3<K>& Q, const Vec3<K>& b,
                            const Curve3T<K>& c) {
    Curve3T<K> out;
    for (int i = 0; i < 3; ++i) {
        RatFunT<K> acc = RatFunT<K>::constant(b[i]);
        for (int j = 0; j < 3; ++j) acc = acc + c.x[j] * (lambda * Q.at(i, j));
        out.x[i] = acc;
    }
    return out;
}

// kappa^2 = A/B, tau = C/D as reduced fractions.
struct DifferentialInvariants {
    UniPoly<Rational> A, B, C, D;
};

struct CurveClass {
    enum class Tag { Line, Circle, PlanarOther, Helical, NonHelical };
    Tag tag = Tag::NonHelical;
    // helical data: mu^2 always; mu itself when its square root is rational
    std::optional<Rational> mu_squared;
    std::optional<Rational> mu;
    int mu_sign = 0;

    std::string tag_name() const {
        switch (tag) {
            case Tag::Line: return "Line";
            case Tag::Circle: return "Circle";
            case Tag::PlanarOther: return "PlanarOther";
            case Tag::Helical: return "Helical";
            case Tag::NonHelical: return "NonHelical";
        }
        return "?";
    }
};

// Componentwise exact derivative of the given order (1..3).
RationalCurve3 derivative(const RationalCurve3& c, int order);

// x' x x'' as rational functions; zero iff the curve is a line.
std::array<RatFun, 3> curve_cross(const RationalCurve3& c);

// Exact curvature-squared and torsion; throws LineInput when x' x x'' == 0.
DifferentialInvariants invariants(const RationalCurve3& c);

CurveClass classify(const RationalCurve3& c);

// Construction with the coprimality invariant enforced.
RationalCurve3 make_curve(const std::array<std::pair<UniPoly<Rational>, UniPoly<Rational>>, 3>& comps);

// Test families.
RationalCurve3 gen_daisy(int j);
std::pair<RationalCurve3, RationalCurve3> gen_power_family(int n);
RationalCurve3 gen_helical_alpha(const Rational& alpha);
std::pair<RationalCurve3, RationalCurve3> gen_crunode_pair();
std::pair<RationalCurve3, RationalCurve3> gen_quint_pair();

// The running-example similarity (ratio 2, rotation in the xy-plane, lift by 2).
void example_similarity(Rational& lambda, Mat3<Rational>& Q, Vec3<Rational>& b);

} // namespace curvesim
