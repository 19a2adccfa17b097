#pragma once

#include "curvesim/reconstruct.hpp"

namespace curvesim {

struct DegenerateCollinear : std::runtime_error {
    DegenerateCollinear()
        : std::runtime_error("all control points are collinear: the rotation is underdetermined") {}
};

// Ordered control-point sequence, identified with its reversal.
struct ControlPolygon {
    std::vector<Vec3<Rational>> points;
};

// A similarity relating two control polygons pointwise, possibly after
// reversing the second sequence. The ratio is rational or a square root of a
// rational; in the latter case the map lives in Q[x]/(x^2 - lambda_squared)
// with the generator embedded as the positive root.
struct PolygonMatch {
    bool reversed = false;
    Rational lambda_squared;
    std::optional<Similarity<Rational>> rational;
    std::optional<Similarity<NFQ>> algebraic;
};

namespace detail_seg {

template <class K>
struct TrivialPolicy {
    bool definite_zero(const K& e) const { return RingTraits<K>::is_zero(e); }
};

// Try to find f with f(p_i) = q_i for all i, with the given signed ratio.
template <class K>
std::optional<Similarity<K>> match_direction(const std::vector<Vec3<K>>& p,
                                             const std::vector<Vec3<K>>& q, const K& lambda,
                                             size_t i0, size_t i1) {
    // frame edges e_a = p[i0+1]-p[i0], e_b = p[i1+1]-p[i1]
    Vec3<K> ea = p[i0 + 1] - p[i0], eb = p[i1 + 1] - p[i1];
    Vec3<K> fa = q[i0 + 1] - q[i0], fb = q[i1 + 1] - q[i1];
    Vec3<K> ec = cross(ea, eb);
    Mat3<K> E = Mat3<K>::from_cols(ea, eb, ec);
    // M = lambda Q: M ea = fa, M eb = fb, M ec = (fa x fb) / lambda
    K det = E.det();
    if (RingTraits<K>::is_zero(det)) return std::nullopt;
    Vec3<K> fc = cross(fa, fb);
    K inv_lambda = RingTraits<K>::divexact(RingTraits<K>::one(), lambda);
    Mat3<K> F = Mat3<K>::from_cols(fa, fb, fc * inv_lambda);
    Mat3<K> M = F * E.inverse();
    Similarity<K> f;
    f.lambda = lambda;
    f.Q = M * inv_lambda;
    detail_seg::TrivialPolicy<K> pol;
    if (!special_orthogonal_with(f.Q, pol)) return std::nullopt;
    f.b = q[0] - M * p[0];
    for (size_t i = 0; i < p.size(); ++i)
        if (!(M * p[i] + f.b == q[i])) return std::nullopt;
    return f;
}

} // namespace detail_seg

// All similarities f (det Q = 1) with f(p_i) = q_i for the forward indexing
// or the reversed indexing of the second polygon. Reflection-type linear
// parts (det = -1) arise as lambda < 0, matching the sign convention of the
// global-curve machinery.
inline std::vector<PolygonMatch> polygon_similarity(const ControlPolygon& P1,
                                                    const ControlPolygon& P2) {
    std::vector<PolygonMatch> out;
    const auto& p = P1.points;
    if (p.size() != P2.points.size() || p.size() < 2) return out;

    // two independent edges of P1
    std::optional<std::pair<size_t, size_t>> frame;
    std::optional<size_t> first_edge;
    for (size_t i = 0; i + 1 < p.size() && !frame; ++i) {
        Vec3<Rational> ei = p[i + 1] - p[i];
        if (ei.is_zero()) continue;
        if (!first_edge) first_edge = i;
        for (size_t j = i + 1; j + 1 < p.size(); ++j) {
            Vec3<Rational> ej = p[j + 1] - p[j];
            if (cross(ei, ej).is_zero()) continue;
            frame = {i, j};
            break;
        }
    }
    if (!first_edge) return out; // all points equal: no valid polygon map
    if (!frame) throw DegenerateCollinear();
    auto [i0, i1] = *frame;

    auto attempt = [&](const std::vector<Vec3<Rational>>& q, bool reversed) {
        Vec3<Rational> e = p[*first_edge + 1] - p[*first_edge];
        Vec3<Rational> fimg = q[*first_edge + 1] - q[*first_edge];
        Rational l2n = dot(fimg, fimg), l2d = dot(e, e);
        if (sgn(l2n) == 0) return;
        Rational l2 = l2n / l2d;
        auto root = rat_sqrt_exact(l2);
        if (root) {
            for (int sign : {1, -1}) {
                Rational lam = *root * sign;
                auto f = detail_seg::match_direction<Rational>(p, q, lam, i0, i1);
                if (f) {
                    PolygonMatch m;
                    m.reversed = reversed;
                    m.lambda_squared = l2;
                    m.rational = *f;
                    out.push_back(std::move(m));
                }
            }
        } else {
            auto ctx = make_nf_context(
                UniPoly<Rational>(std::vector<Rational>{-l2, 0, 1}));
            NFQ gen = NFQ::generator(ctx); // embedded as +sqrt(l2)
            std::vector<Vec3<NFQ>> pk, qk;
            for (const auto& v : p) pk.push_back(vec_cast3<NFQ>(v));
            for (const auto& v : q) qk.push_back(vec_cast3<NFQ>(v));
            for (int sign : {1, -1}) {
                NFQ lam = sign == 1 ? gen : -gen;
                auto f = detail_seg::match_direction<NFQ>(pk, qk, lam, i0, i1);
                if (f) {
                    PolygonMatch m;
                    m.reversed = reversed;
                    m.lambda_squared = l2;
                    m.algebraic = *f;
                    out.push_back(std::move(m));
                }
            }
        }
    };

    attempt(P2.points, false);
    std::vector<Vec3<Rational>> rev(P2.points.rbegin(), P2.points.rend());
    attempt(rev, true);

    // palindromic second polygons can produce the same map twice
    std::vector<PolygonMatch> dedup;
    for (auto& m : out) {
        bool dup = false;
        for (const auto& d : dedup) {
            if (m.rational && d.rational && m.rational->lambda == d.rational->lambda &&
                m.rational->Q == d.rational->Q && m.rational->b == d.rational->b)
                dup = true;
            if (m.algebraic && d.algebraic && m.algebraic->lambda == d.algebraic->lambda &&
                m.algebraic->Q == d.algebraic->Q && m.algebraic->b == d.algebraic->b)
                dup = true;
        }
        if (!dup) dedup.push_back(std::move(m));
    }
    return dedup;
}

} // namespace curvesim
