#pragma once

#include "curvesim/moebius_search.hpp"

namespace curvesim {

struct SingularFrame : std::runtime_error {
    SingularFrame() : std::runtime_error("frame matrix singular: curvature vanishes at t = 0") {}
};

template <class K>
struct Similarity {
    K lambda;
    Mat3<K> Q;
    Vec3<K> b;
};

// Shift t -> t + alpha with the smallest |alpha| making x regular at 0 with
// nonvanishing curvature: x(0), x'(0), x''(0) defined, x'(0) x x''(0) != 0.
inline std::pair<RationalCurve3, Rational> normalize_origin(const RationalCurve3& x1) {
    std::array<RatFun, 3> cr = curve_cross(x1);
    if (cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero()) throw LineInput();
    long k = 0;
    for (int tries = 0; tries < 1000; ++tries) {
        Rational alpha(k);
        k = k > 0 ? -k : -k + 1;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            ok = sgn(x1[i].den.eval(alpha)) != 0 && sgn(cr[i].den.eval(alpha)) != 0;
        if (!ok) continue;
        Vec3<Rational> cv;
        for (int i = 0; i < 3; ++i) cv[i] = *cr[i].eval(alpha);
        if (cv.is_zero()) continue;
        if (sgn(alpha) == 0) return {x1, alpha};
        RationalCurve3 shifted = compose(x1, Moebius<Rational>::translation(alpha));
        return {shifted, alpha};
    }
    throw std::logic_error("no regular shift found");
}

namespace detail_rec {

template <class K, class Policy>
std::optional<Vec3<K>> eval_definite(const Curve3T<K>& c, const K& t, const Policy& pol) {
    Vec3<K> v;
    for (int i = 0; i < 3; ++i) {
        K den = c[i].den.eval(t);
        if (pol.definite_zero(den)) return std::nullopt;
        v[i] = RingTraits<K>::divexact(c[i].num.eval(t), den);
    }
    return v;
}

} // namespace detail_rec

// Q and b for a verified (lambda0, phi). The fundamental identity
// lambda0 Q x1(t) + b = x2(phi(t)) is differentiated twice and evaluated at a
// regular point t* (t* = 0 when phi(0) and the frame are finite, matching the
// classical display; otherwise the next usable rational point): with
// B = [l x1'(t*), l x1''(t*), l^2 x1' x x1''(t*)] and C the corresponding
// x2-side frame, Q = C B^{-1} and b closes the diagram at t*. Returns nullopt
// when a spurious candidate evaluates into a pole at every probe.
template <class K, class Policy>
std::optional<Similarity<K>> recover_similarity(const Curve3T<K>& x1, const Curve3T<K>& x2,
                                                const Moebius<K>& phi, const K& lambda0,
                                                const Policy& pol) {
    Curve3T<K> d1 = x1.derivative();
    Curve3T<K> d2 = d1.derivative();
    Curve3T<K> x2d = x2.derivative();
    Curve3T<K> x2dd = x2d.derivative();
    K two = ring_from_uint<K>(2);

    bool saw_frame = false;
    long k = 0;
    for (int tries = 0; tries < 64; ++tries) {
        K t = RingTraits<K>::from_rational(Rational(k));
        k = k > 0 ? -k : -k + 1;
        K w = phi.c * t + phi.d;
        if (pol.definite_zero(w)) continue;
        auto x1v = detail_rec::eval_definite(x1, t, pol);
        auto d1v = detail_rec::eval_definite(d1, t, pol);
        auto d2v = detail_rec::eval_definite(d2, t, pol);
        if (!x1v || !d1v || !d2v) continue;
        Vec3<K> c1 = cross(*d1v, *d2v);
        Mat3<K> B = Mat3<K>::from_cols((*d1v) * lambda0, (*d2v) * lambda0,
                                       c1 * (lambda0 * lambda0));
        if (pol.definite_zero(B.det())) continue;
        saw_frame = true;

        K u = RingTraits<K>::divexact(phi.a * t + phi.b, w);
        auto x2v = detail_rec::eval_definite(x2, u, pol);
        auto p1 = detail_rec::eval_definite(x2d, u, pol);
        auto p2 = detail_rec::eval_definite(x2dd, u, pol);
        if (!x2v || !p1 || !p2) return std::nullopt; // pole: spurious candidate

        K delta = phi.delta();
        K dphi = RingTraits<K>::divexact(delta, w * w);            // phi'(t*)
        K ddphi = RingTraits<K>::zero() -
                  RingTraits<K>::divexact(two * phi.c * delta, w * w * w); // phi''(t*)
        Vec3<K> col1 = (*p1) * dphi;
        Vec3<K> col2 = (*p2) * (dphi * dphi) + (*p1) * ddphi;
        Vec3<K> col3 = cross(*p1, *p2) * (dphi * dphi * dphi);
        Mat3<K> C = Mat3<K>::from_cols(col1, col2, col3);

        Similarity<K> f;
        f.lambda = lambda0;
        f.Q = C * B.inverse();
        f.b = *x2v - (f.Q * (*x1v)) * lambda0;
        return f;
    }
    if (!saw_frame) throw SingularFrame();
    return std::nullopt;
}

// lambda Q x1(t) + b == x2(phi(t)) exactly, componentwise.
template <class K, class Policy>
bool verify_similarity_with(const Similarity<K>& f, const Curve3T<K>& x1, const Curve3T<K>& x2,
                            const Moebius<K>& phi, const Policy& pol) {
    Curve3T<K> lhs = apply_similarity(f.lambda, f.Q, f.b, x1);
    Curve3T<K> rhs = compose(x2, phi);
    for (int i = 0; i < 3; ++i) {
        UniPoly<K> diff = lhs[i].num * rhs[i].den - rhs[i].num * lhs[i].den;
        for (const auto& c : diff.coeffs())
            if (!pol.definite_zero(c)) return false;
    }
    return true;
}

inline bool verify_similarity(const Similarity<Rational>& f, const RationalCurve3& x1,
                              const RationalCurve3& x2, const Moebius<Rational>& phi) {
    return verify_similarity_with(f, x1, x2, phi, RationalPolicy{});
}

// Q^T Q == I and det Q == 1, exactly.
template <class K, class Policy>
bool special_orthogonal_with(const Mat3<K>& Q, const Policy& pol) {
    Mat3<K> gram = Q.transpose() * Q;
    Mat3<K> I = Mat3<K>::identity();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (!pol.definite_zero(gram.at(r, c) - I.at(r, c))) return false;
    return pol.definite_zero(Q.det() - RingTraits<K>::one());
}

// tau_{x1} = lambda * (tau_{x2} o phi): the sign-coherence relation.
template <class K, class Policy>
bool torsion_relation_with(const DifferentialInvariants& i1, const DifferentialInvariants& i2,
                           const Moebius<K>& phi, const K& lambda0, const Policy& pol) {
    RatFunT<K> t1 = RatFunT<K>::make(poly_cast<K>(i1.C), poly_cast<K>(i1.D));
    RatFunT<K> t2 = RatFunT<K>::make(poly_cast<K>(i2.C), poly_cast<K>(i2.D));
    RatFunT<K> rhs = compose_ratfun_moebius(t2, phi) * lambda0;
    UniPoly<K> diff = t1.num * rhs.den - rhs.num * t1.den;
    for (const auto& c : diff.coeffs())
        if (!pol.definite_zero(c)) return false;
    return true;
}

} // namespace curvesim
