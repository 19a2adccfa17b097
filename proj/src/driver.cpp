#include "curvesim/driver.hpp"

#include <algorithm>
#include <functional>

namespace curvesim {

// ---------------------------------------------------------------------------
// scalar representations

ScalarRepr repr_rational(const Rational& v, int precision) {
    ScalarRepr r;
    r.kind = "rational";
    r.value = to_string(v);
    r.approx = rat_decimal(v, precision);
    return r;
}

ScalarRepr repr_algebraic(const AlgebraicNumber& a, int precision) {
    if (a.is_rational_val()) return repr_rational(a.rational_value(), precision);
    ScalarRepr r;
    r.kind = "algebraic";
    for (int i = 0; i <= a.defining.degree(); ++i) r.poly.push_back(to_string(a.defining.coeff(i)));
    r.lo = to_string(a.lo);
    r.hi = to_string(a.hi);
    r.value = poly_str(a.defining, "L") + " = 0";
    r.approx = decimal(a, precision);
    return r;
}

ScalarRepr repr_nf(const NFQ& e, AlgebraicNumber alpha, int precision) {
    if (!e.ctx() || e.rep().degree() <= 0) {
        Rational v = e.rep().is_zero() ? Rational(0) : e.rep().coeff(0);
        return repr_rational(v, precision);
    }
    ScalarRepr r;
    r.kind = "nf";
    r.value = poly_str(e.rep(), "L");
    Rational width(1, int_pow(10, precision + 1));
    auto [lo, hi] = enclose_embedded(e, alpha, width);
    r.approx = rat_decimal((lo + hi) / 2, precision);
    return r;
}

namespace {

// ---------------------------------------------------------------------------
// typed candidate bookkeeping

struct Candidate {
    AlgebraicNumber lambda;
    std::string source; // S0 | S1 | S2 | H
};

AlgebraicNumber abs_value(const AlgebraicNumber& a) {
    AlgebraicNumber c = a;
    if (sign_of(c) < 0) return negate(c);
    return c;
}

// ordering: rationals by |num|+|den| ascending, then algebraics by defining
// degree, final tiebreak by value
bool candidate_less(const Candidate& x, const Candidate& y) {
    bool xr = x.lambda.is_rational_val(), yr = y.lambda.is_rational_val();
    if (xr != yr) return xr;
    if (xr && yr) {
        const Rational &a = x.lambda.rational_value(), &b = y.lambda.rational_value();
        Integer ca = abs(Integer(a.get_num())) + Integer(a.get_den());
        Integer cb = abs(Integer(b.get_num())) + Integer(b.get_den());
        if (ca != cb) return ca < cb;
    } else {
        int da = x.lambda.defining.degree(), db = y.lambda.defining.degree();
        if (da != db) return da < db;
    }
    return compare(x.lambda, y.lambda) < 0;
}

struct VerifyContext {
    const RationalCurve3& x1;
    const RationalCurve3& x2;
    const RationalCurve3& x1n; // origin-normalized copy of x1
    Rational shift;            // x1n(t) = x1(t + shift)
    const DifferentialInvariants& i1;
    const DifferentialInvariants& i2;
    const LambdaPolys& kt;
    bool helical;
    const Options& opts;
};

struct CandidateOutcome {
    std::vector<MatchRepr> matches;
    std::string reject_reason;
    bool inconclusive = false;
    std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// the per-candidate verification pipeline, templated over the ground field

template <class K, class Policy>
void verify_over_field(const VerifyContext& vc, const K& lambda0, const Policy& pol,
                       const ScalarRepr& lamRepr,
                       const std::function<ScalarRepr(const K&)>& scalar,
                       const std::function<ScalarRepr(const NFElem<K>&, const UniPoly<K>&)>& escalar,
                       const std::string& field_name, CandidateOutcome& out) {
    BivarPoly<K> G;
    if (vc.helical) {
        G = specialize_lambda(vc.kt.T, lambda0);
    } else {
        BivarPoly<K> Ks = specialize_lambda(vc.kt.K, lambda0);
        BivarPoly<K> Ts = specialize_lambda(vc.kt.T, lambda0);
        if (Ks.is_zero() || Ts.is_zero()) {
            out.reject_reason = "K or T vanished at this ratio";
            return;
        }
        G = gcd_bivar(Ks, Ts);
    }
    if (G.is_zero() || G.deg_s() < 1) {
        out.reject_reason = "G has no Moebius-like factor (gcd trivial)";
        return;
    }

    Curve3T<K> x1k = curve_cast<K>(vc.x1);
    Curve3T<K> x2k = curve_cast<K>(vc.x2);
    auto search = moebius_like_factors_with(G, x1k, x2k, lambda0, pol, vc.opts.max_ext_degree);
    if (search.inconclusive) {
        out.inconclusive = true;
        for (auto& n : search.notes) out.notes.push_back(n);
    }
    if (search.transforms.empty() && search.branches.empty()) {
        if (out.reject_reason.empty())
            out.reject_reason = search.arc_failed.empty()
                                    ? "no Moebius-like factor of G"
                                    : "Moebius factors exist but fail the arc-length condition";
        return;
    }

    Curve3T<K> x1nk = curve_cast<K>(vc.x1n);
    Moebius<K> shiftm = Moebius<K>::translation(RingTraits<K>::from_rational(vc.shift));

    for (const auto& phi : search.transforms) {
        Moebius<K> phin = phi.compose(shiftm); // anchor the frame at the shifted origin
        auto f = recover_similarity(x1nk, x2k, phin, lambda0, pol);
        if (!f) {
            out.notes.push_back("reconstruction hit a pole; improper input suspected");
            out.inconclusive = true;
            continue;
        }
        bool ok = verify_similarity_with(*f, x1k, x2k, phi, pol) &&
                  special_orthogonal_with(f->Q, pol) &&
                  torsion_relation_with(vc.i1, vc.i2, phi, lambda0, pol);
        if (!ok) {
            out.notes.push_back(
                "arc-length passed but the global identity failed; improper input suspected");
            out.inconclusive = true;
            continue;
        }
        MatchRepr m;
        m.lambda = lamRepr;
        for (int i = 0; i < 4; ++i)
            m.phi.coeff[i] = scalar(i == 0 ? phi.a : i == 1 ? phi.b : i == 2 ? phi.c : phi.d);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.Q[r][c] = scalar(f->Q.at(r, c));
        for (int i = 0; i < 3; ++i) m.b[i] = scalar(f->b[i]);
        m.field = field_name;
        m.trivial = phi.is_identity() && RingTraits<K>::is_zero(lambda0 - RingTraits<K>::one());
        out.matches.push_back(std::move(m));
    }

    // extension branches: reconstruct and verify in K[s0]/(h), forking on
    // zero divisors; each real embedding of a verified branch is one match
    using E = NFElem<K>;
    std::deque<UniPoly<K>> work;
    for (const auto& br : search.branches) work.push_back(br.modulus);
    const auto& abcd = search.abcd;
    int guard = 0;
    while (!work.empty() && ++guard < 256) {
        UniPoly<K> h = std::move(work.front());
        work.pop_front();
        if (h.degree() < 1) continue;
        try {
            auto ctx = make_nf_context<K>(h);
            E s0 = E::generator(ctx);
            auto liftp = [&](const UniPoly<K>& p) {
                return p.template map_coeffs<E>([](const K& v) { return E(v); }).eval(s0);
            };
            Moebius<E> phiE(liftp(abcd[0]), liftp(abcd[1]), liftp(abcd[2]), liftp(abcd[3]));
            ForkPolicy<K> fpol{h};
            if (fpol.definite_zero(phiE.delta())) continue;
            Curve3T<E> x1e{{ratfun_lift<K>(x1k[0]), ratfun_lift<K>(x1k[1]), ratfun_lift<K>(x1k[2])}};
            Curve3T<E> x2e{{ratfun_lift<K>(x2k[0]), ratfun_lift<K>(x2k[1]), ratfun_lift<K>(x2k[2])}};
            Curve3T<E> x1ne{{ratfun_lift<K>(x1nk[0]), ratfun_lift<K>(x1nk[1]),
                             ratfun_lift<K>(x1nk[2])}};
            E lamE = E(lambda0);
            if (!arc_length_check_with(x1e, x2e, phiE, lamE, fpol)) continue;
            Moebius<E> phinE = phiE.compose(Moebius<E>::translation(E(RingTraits<K>::from_rational(vc.shift))));
            auto fE = recover_similarity(x1ne, x2e, phinE, lamE, fpol);
            if (!fE) continue;
            bool ok = verify_similarity_with(*fE, x1e, x2e, phiE, fpol) &&
                      special_orthogonal_with(fE->Q, fpol);
            if (!ok) continue;
            // count and report the real embeddings
            int realn = 0;
            std::vector<std::string> root_notes;
            if constexpr (std::is_same_v<K, Rational>) {
                auto roots = isolate_real_roots(h);
                realn = (int)roots.size();
                for (auto& rt : roots)
                    root_notes.push_back("s0 ~ " + decimal(rt, vc.opts.precision));
            } else {
                realn = detail_search::real_root_count(h, pol);
                for (int i = 0; i < realn; ++i) root_notes.push_back("s0 real root");
            }
            for (int r = 0; r < realn; ++r) {
                MatchRepr m;
                m.lambda = lamRepr;
                for (int i = 0; i < 4; ++i)
                    m.phi.coeff[i] = escalar(i == 0   ? phiE.a
                                             : i == 1 ? phiE.b
                                             : i == 2 ? phiE.c
                                                      : phiE.d,
                                             h);
                for (int rr = 0; rr < 3; ++rr)
                    for (int cc = 0; cc < 3; ++cc) m.Q[rr][cc] = escalar(fE->Q.at(rr, cc), h);
                for (int i = 0; i < 3; ++i) m.b[i] = escalar(fE->b[i], h);
                m.field = field_name + "[s0]/(" + poly_str(h, "s0") + ")";
                m.note = root_notes[r];
                out.matches.push_back(std::move(m));
            }
        } catch (const ZeroDivisorSplit<K>& z) {
            if (z.modulus == h) {
                work.push_back(z.factor);
                work.push_back(divexact_poly(h, z.factor));
            } else {
                throw;
            }
        }
    }
}

CandidateOutcome verify_candidate(const VerifyContext& vc, Candidate cand) {
    CandidateOutcome out;
    if (cand.lambda.is_rational_val()) {
        Rational lam = cand.lambda.rational_value();
        RationalPolicy pol;
        auto scalar = [&](const Rational& v) { return repr_rational(v, vc.opts.precision); };
        auto escalar = [&](const NFQ& e, const UniPoly<Rational>& h) {
            ScalarRepr r;
            r.kind = "nf";
            r.value = poly_str(e.rep(), "s0");
            (void)h;
            return r;
        };
        verify_over_field<Rational>(vc, lam, pol, repr_rational(lam, vc.opts.precision), scalar,
                                    escalar, "Q", out);
        return out;
    }
    // algebraic ratio: dynamic evaluation with branch refinement
    AlgebraicNumber alpha = cand.lambda;
    for (int attempt = 0; attempt <= 64; ++attempt) {
        if (alpha.is_rational_val()) {
            Candidate c2{alpha, cand.source};
            return verify_candidate(vc, c2);
        }
        auto ctx = make_nf_context(alpha.defining);
        NFQ lam = NFQ::generator(ctx);
        EmbeddedPolicy pol{&alpha};
        try {
            out = CandidateOutcome{};
            auto scalar = [&](const NFQ& e) { return repr_nf(e, alpha, vc.opts.precision); };
            auto escalar = [&](const NFElem<NFQ>& e, const UniPoly<NFQ>& h) {
                ScalarRepr r;
                r.kind = "nf";
                r.value = poly_str(e.rep(), "s0");
                (void)h;
                return r;
            };
            verify_over_field<NFQ>(vc, lam, pol, repr_algebraic(alpha, vc.opts.precision), scalar,
                                   escalar, "Q(L)", out);
            return out;
        } catch (const ZeroDivisorSplit<Rational>& z) {
            if (z.modulus == alpha.defining) {
                restrict_defining(alpha, z.factor);
                continue;
            }
            throw;
        }
    }
    out.reject_reason = "branch refinement did not settle";
    out.inconclusive = true;
    return out;
}

// ---------------------------------------------------------------------------
// line / circle fast-path witnesses

struct LineData {
    Vec3<Rational> point, dir;
};

LineData line_data(const RationalCurve3& c) {
    RationalCurve3 d = c.derivative();
    long k = 0;
    for (int tries = 0; tries < 200; ++tries) {
        Rational t(k);
        k = k > 0 ? -k : -k + 1;
        auto p = c.eval(t);
        auto v = d.eval(t);
        if (p && v && !v->is_zero()) return {*p, *v};
    }
    throw std::logic_error("no regular sample on the line");
}

struct CircleData {
    Vec3<Rational> center, normal;
    Rational r2;
};

CircleData circle_data(const RationalCurve3& c) {
    // three distinct regular samples
    std::vector<Vec3<Rational>> pts;
    long k = 0;
    for (int tries = 0; tries < 400 && pts.size() < 3; ++tries) {
        Rational t(k);
        k = k > 0 ? -k : -k + 1;
        auto p = c.eval(t);
        if (!p) continue;
        bool dupe = false;
        for (auto& q : pts)
            if (q == *p) dupe = true;
        if (!dupe) pts.push_back(*p);
    }
    if (pts.size() < 3) throw std::logic_error("could not sample the circle");
    Vec3<Rational> u = pts[1] - pts[0], v = pts[2] - pts[0];
    Vec3<Rational> n = cross(u, v);
    assert(!n.is_zero());
    // solve for the center: 2 u.x = |p1|^2-|p0|^2, 2 v.x = |p2|^2-|p0|^2, n.x = n.p0
    Mat3<Rational> A = Mat3<Rational>::from_cols(
        Vec3<Rational>{{2 * u[0], 2 * v[0], n[0]}}, Vec3<Rational>{{2 * u[1], 2 * v[1], n[1]}},
        Vec3<Rational>{{2 * u[2], 2 * v[2], n[2]}});
    Vec3<Rational> rhs{{dot(pts[1], pts[1]) - dot(pts[0], pts[0]),
                        dot(pts[2], pts[2]) - dot(pts[0], pts[0]), dot(n, pts[0])}};
    Vec3<Rational> center = A.inverse() * rhs;
    Vec3<Rational> d0 = pts[0] - center;
    return {center, n, dot(d0, d0)};
}

// rotation with Q u = w, |w| = |u|, det Q = 1, over any field
template <class K>
Mat3<K> rotation_taking(const Vec3<K>& u, const Vec3<K>& w) {
    Vec3<K> n = u - w;
    if (n.is_zero()) return Mat3<K>::identity();
    Vec3<K> m = cross(u, w);
    if (m.is_zero()) {
        // w = -u: half turn about any axis orthogonal to u
        Vec3<K> axis = cross(u, Vec3<K>{{RingTraits<K>::one(), RingTraits<K>::zero(),
                                         RingTraits<K>::zero()}});
        if (axis.is_zero())
            axis = cross(u, Vec3<K>{{RingTraits<K>::zero(), RingTraits<K>::one(),
                                     RingTraits<K>::zero()}});
        K n2 = dot(axis, axis);
        Mat3<K> Q;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                K v = RingTraits<K>::divexact(axis[r] * axis[c] + axis[r] * axis[c], n2);
                if (r == c) v = v - RingTraits<K>::one();
                Q.set(r, c, v);
            }
        return Q;
    }
    auto reflect = [](const Vec3<K>& nn) {
        K n2 = dot(nn, nn);
        Mat3<K> H = Mat3<K>::identity();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                H.set(r, c, H.at(r, c) - RingTraits<K>::divexact(nn[r] * nn[c] + nn[r] * nn[c], n2));
        return H;
    };
    return reflect(m) * reflect(n);
}

void witness_match(SimilarityReport& rep, const ScalarRepr& lam,
                   const std::array<std::array<ScalarRepr, 3>, 3>& Q,
                   const std::array<ScalarRepr, 3>& b, const std::string& field,
                   const std::string& note) {
    MatchRepr m;
    m.lambda = lam;
    ScalarRepr one = repr_rational(1, 6), zero = repr_rational(0, 6);
    m.phi.coeff = {one, zero, zero, one};
    m.Q = Q;
    m.b = b;
    m.field = field;
    m.note = note;
    rep.matches.push_back(std::move(m));
    rep.similar = true;
    rep.notes.push_back("fast path witness: the reported phi is a placeholder identity; the "
                        "similarity maps the first curve onto the second as a set");
}

void lines_witness(const RationalCurve3& x1, const RationalCurve3& x2, const Options& opts,
                   SimilarityReport& rep) {
    LineData l1 = line_data(x1), l2 = line_data(x2);
    Rational s = dot(l1.dir, l1.dir) / dot(l2.dir, l2.dir);
    auto rs = rat_sqrt_exact(s);
    if (rs) {
        Vec3<Rational> w = l2.dir * *rs;
        Mat3<Rational> Q = rotation_taking<Rational>(l1.dir, w);
        Vec3<Rational> b = l2.point - Q * l1.point;
        std::array<std::array<ScalarRepr, 3>, 3> Qr;
        std::array<ScalarRepr, 3> br;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) Qr[r][c] = repr_rational(Q.at(r, c), opts.precision);
        for (int i = 0; i < 3; ++i) br[i] = repr_rational(b[i], opts.precision);
        witness_match(rep, repr_rational(1, opts.precision), Qr, br, "Q",
                      "both curves are lines; witness isometry");
        return;
    }
    auto ctx = make_nf_context(UniPoly<Rational>(std::vector<Rational>{-s, 0, 1}));
    NFQ t = NFQ::generator(ctx);
    AlgebraicNumber talg;
    talg.defining = ctx->modulus;
    talg.lo = 0;
    {
        Rational hi = 1;
        while (hi * hi < s) hi = hi * 2;
        talg.hi = hi;
    }
    Vec3<NFQ> u = vec_cast3<NFQ>(l1.dir);
    Vec3<NFQ> w = vec_cast3<NFQ>(l2.dir) * t;
    Mat3<NFQ> Q = rotation_taking<NFQ>(u, w);
    Vec3<NFQ> b = vec_cast3<NFQ>(l2.point) - Q * vec_cast3<NFQ>(l1.point);
    std::array<std::array<ScalarRepr, 3>, 3> Qr;
    std::array<ScalarRepr, 3> br;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) Qr[r][c] = repr_nf(Q.at(r, c), talg, opts.precision);
    for (int i = 0; i < 3; ++i) br[i] = repr_nf(b[i], talg, opts.precision);
    witness_match(rep, repr_rational(1, opts.precision), Qr, br,
                  "Q(L), L^2 = " + to_string(s), "both curves are lines; witness isometry");
}

void circles_witness(const RationalCurve3& x1, const RationalCurve3& x2, const Options& opts,
                     SimilarityReport& rep) {
    CircleData c1 = circle_data(x1), c2 = circle_data(x2);
    Rational r = c2.r2 / c1.r2;           // lambda^2
    Rational s = dot(c1.normal, c1.normal) / dot(c2.normal, c2.normal); // t^2
    auto lamr = rat_sqrt_exact(r);
    auto tr = rat_sqrt_exact(s);
    if (lamr && tr) {
        Rational lam = *lamr;
        Mat3<Rational> Q = rotation_taking<Rational>(c1.normal, c2.normal * *tr);
        Vec3<Rational> b = c2.center - Q * c1.center * lam;
        std::array<std::array<ScalarRepr, 3>, 3> Qr;
        std::array<ScalarRepr, 3> br;
        for (int rr = 0; rr < 3; ++rr)
            for (int cc = 0; cc < 3; ++cc) Qr[rr][cc] = repr_rational(Q.at(rr, cc), opts.precision);
        for (int i = 0; i < 3; ++i) br[i] = repr_rational(b[i], opts.precision);
        witness_match(rep, repr_rational(lam, opts.precision), Qr, br, "Q",
                      "both curves are circles; witness similarity");
        return;
    }
    // one quadratic extension carrying sqrt(r); t handled in the same field
    // when s or s*r is a rational square, otherwise a second extension
    auto ctx = make_nf_context(UniPoly<Rational>(std::vector<Rational>{-r, 0, 1}));
    NFQ lam = NFQ::generator(ctx);
    AlgebraicNumber lamalg;
    lamalg.defining = ctx->modulus;
    lamalg.lo = 0;
    {
        Rational hi = 1;
        while (hi * hi < r) hi = hi * 2;
        lamalg.hi = hi;
    }
    if (lamr) lam = RingTraits<NFQ>::from_rational(*lamr);
    std::optional<NFQ> tval;
    if (tr) tval = RingTraits<NFQ>::from_rational(*tr);
    if (!tval) {
        auto sr = rat_sqrt_exact(s / r);
        if (sr) tval = lam * *sr; // t = sqrt(s/r) * lambda
    }
    if (tval) {
        Mat3<NFQ> Q = rotation_taking<NFQ>(vec_cast3<NFQ>(c1.normal),
                                           vec_cast3<NFQ>(c2.normal) * *tval);
        Vec3<NFQ> b = vec_cast3<NFQ>(c2.center) - Q * vec_cast3<NFQ>(c1.center) * lam;
        std::array<std::array<ScalarRepr, 3>, 3> Qr;
        std::array<ScalarRepr, 3> br;
        for (int rr = 0; rr < 3; ++rr)
            for (int cc = 0; cc < 3; ++cc) Qr[rr][cc] = repr_nf(Q.at(rr, cc), lamalg, opts.precision);
        for (int i = 0; i < 3; ++i) br[i] = repr_nf(b[i], lamalg, opts.precision);
        witness_match(rep, repr_nf(lam, lamalg, opts.precision), Qr, br,
                      "Q(L), L^2 = " + to_string(r), "both curves are circles; witness similarity");
        return;
    }
    // general case: tower Q(sqrt r)(sqrt s)
    using E = NFElem<NFQ>;
    auto ctx2 = make_nf_context<NFQ>(UniPoly<NFQ>(
        std::vector<NFQ>{RingTraits<NFQ>::from_rational(-s), RingTraits<NFQ>::zero(),
                         RingTraits<NFQ>::one()}));
    E t2 = E::generator(ctx2);
    E laml = E(lam);
    Mat3<E> Q = rotation_taking<E>(
        Vec3<E>{{E(RingTraits<NFQ>::from_rational(c1.normal[0])),
                 E(RingTraits<NFQ>::from_rational(c1.normal[1])),
                 E(RingTraits<NFQ>::from_rational(c1.normal[2]))}},
        Vec3<E>{{E(RingTraits<NFQ>::from_rational(c2.normal[0])) * t2,
                 E(RingTraits<NFQ>::from_rational(c2.normal[1])) * t2,
                 E(RingTraits<NFQ>::from_rational(c2.normal[2])) * t2}});
    Vec3<E> b;
    for (int i = 0; i < 3; ++i)
        b[i] = E(RingTraits<NFQ>::from_rational(c2.center[i])) -
               (Q.cols[0] * E(RingTraits<NFQ>::from_rational(c1.center[0])) +
                Q.cols[1] * E(RingTraits<NFQ>::from_rational(c1.center[1])) +
                Q.cols[2] * E(RingTraits<NFQ>::from_rational(c1.center[2])))[i] *
                   laml;
    std::array<std::array<ScalarRepr, 3>, 3> Qr;
    std::array<ScalarRepr, 3> br;
    auto es = [&](const E& e) {
        ScalarRepr rr;
        rr.kind = "nf";
        rr.value = "(" + poly_str(e.rep(), "T") + "), T^2 = " + to_string(s);
        return rr;
    };
    for (int rr = 0; rr < 3; ++rr)
        for (int cc = 0; cc < 3; ++cc) Qr[rr][cc] = es(Q.at(rr, cc));
    for (int i = 0; i < 3; ++i) br[i] = es(b[i]);
    witness_match(rep, repr_nf(lam, lamalg, opts.precision), Qr, br,
                  "Q(L)(T), L^2 = " + to_string(r) + ", T^2 = " + to_string(s),
                  "both curves are circles; witness similarity");
}

} // namespace

// ---------------------------------------------------------------------------

SimilarityReport similar3d(const RationalCurve3& x1, const RationalCurve3& x2,
                           const Options& opts) {
    SimilarityReport rep;
    CurveClass cl1 = classify(x1), cl2 = classify(x2);
    rep.class1 = cl1.tag_name();
    rep.class2 = cl2.tag_name();

    using Tag = CurveClass::Tag;
    bool special1 = cl1.tag == Tag::Line || cl1.tag == Tag::Circle;
    bool special2 = cl2.tag == Tag::Line || cl2.tag == Tag::Circle;
    if (special1 && special2) {
        if (cl1.tag != cl2.tag) {
            rep.notes.push_back("a line is never similar to a circle");
            return rep;
        }
        if (cl1.tag == Tag::Line)
            lines_witness(x1, x2, opts, rep);
        else
            circles_witness(x1, x2, opts, rep);
        return rep;
    }
    if (special1 || special2) {
        rep.notes.push_back("exactly one input is a line or circle");
        return rep;
    }
    if (cl1.tag == Tag::PlanarOther || cl2.tag == Tag::PlanarOther) throw PlanarUnsupported();

    bool h1 = cl1.tag == Tag::Helical, h2 = cl2.tag == Tag::Helical;
    if (h1 != h2) {
        rep.notes.push_back("exactly one curvature/torsion ratio is constant");
        return rep;
    }

    DifferentialInvariants i1 = invariants(x1), i2 = invariants(x2);
    LambdaPolys kt = build_KT(i1, i2);
    bool helical = h1 && h2;
    rep.helical_route = helical;

    std::vector<Candidate> cands;
    UniPoly<Rational> Lraw, Lsf;
    Rational used_t0 = 0;

    if (helical) {
        // step 7.1 precheck: |mu1| == |mu2| exactly
        if (*cl1.mu_squared != *cl2.mu_squared) {
            rep.notes.push_back("helical proportionality constants differ in absolute value");
            return rep;
        }
        HelicalEliminationData data;
        auto [cand, t0] = candidate_ratios_helical_auto(kt.T, opts.t0_list, &data);
        used_t0 = t0;
        rep.helical_t0 = t0;
        Lraw = cand.Lambda_raw;
        Lsf = cand.Lambda;
        for (auto& r : cand.roots) cands.push_back({r, "S0"});
        auto [S1, S2] = sets_S1_S2(kt.T, t0);
        for (auto& r : S1) cands.push_back({r, "S1"});
        for (auto& r : S2) cands.push_back({r, "S2"});
    } else if (opts.strategy == Options::Strategy::HPoly) {
        // alternative route: Moebius-like factors of H, then the ratio as a
        // constant quotient; every candidate feeds the standard verification
        BivarPoly<Rational> H = build_H(i1, i2);
        if (H.is_zero()) {
            rep.notes.push_back("H vanished identically on a non-helical pair");
            throw EliminationCollapse();
        }
        auto search = moebius_like_factors_with(H, x1, x2, Rational(1), RationalPolicy{},
                                                opts.max_ext_degree);
        for (const auto& phi : search.transforms) {
            auto lam = ratio_from_moebius(phi, i1, i2);
            if (lam) cands.push_back({AlgebraicNumber::from_rational(*lam), "H"});
        }
        for (const auto& phi : search.arc_failed) {
            // arc check ran at the placeholder ratio 1; redo per-candidate
            auto lam = ratio_from_moebius(phi, i1, i2);
            if (lam) cands.push_back({AlgebraicNumber::from_rational(*lam), "H"});
        }
        rep.notes.push_back("candidates from the H-polynomial strategy");
    } else {
        auto cand = candidate_ratios(kt);
        Lraw = cand.Lambda_raw;
        Lsf = cand.Lambda;
        for (auto& r : cand.roots) cands.push_back({r, "S0"});
    }
    rep.lambda_poly = Lsf.is_zero() ? "" : poly_str(Lsf, "L");
    rep.lambda_poly_raw = Lraw.is_zero() ? "" : poly_str(Lraw, "L");

    // drop zero ratios, dedup, order by complexity
    {
        std::vector<Candidate> uniq;
        for (auto& c : cands) {
            AlgebraicNumber copy = c.lambda;
            if (sign_of(copy) == 0) continue;
            c.lambda = copy;
            bool dup = false;
            for (auto& u : uniq)
                if (equal(u.lambda, c.lambda)) {
                    dup = true;
                    break;
                }
            if (!dup) uniq.push_back(c);
        }
        std::sort(uniq.begin(), uniq.end(), candidate_less);
        cands = std::move(uniq);
    }

    auto [x1n, shift] = normalize_origin(x1);
    VerifyContext vc{x1, x2, x1n, shift, i1, i2, kt, helical, opts};

    std::optional<AlgebraicNumber> lambda_abs; // |lambda| of the first verified ratio
    for (auto& c : cands) {
        CandidateRepr cr;
        cr.lambda = repr_algebraic(c.lambda, opts.precision);
        cr.source = c.source;
        if (!opts.enumerate_all && lambda_abs) {
            AlgebraicNumber a = abs_value(c.lambda);
            if (!equal(a, *lambda_abs)) {
                cr.status = "skipped";
                cr.reason = "only the opposite ratio can also verify (|lambda| is unique)";
                rep.candidates.push_back(std::move(cr));
                continue;
            }
        }
        CandidateOutcome outc = verify_candidate(vc, c);
        for (auto& n : outc.notes) rep.notes.push_back(n);
        if (outc.inconclusive) rep.inconclusive = true;
        if (!outc.matches.empty()) {
            cr.status = "verified";
            if (!lambda_abs) lambda_abs = abs_value(c.lambda);
            for (auto& m : outc.matches) rep.matches.push_back(std::move(m));
        } else {
            cr.status = "rejected";
            cr.reason = outc.reject_reason;
        }
        rep.candidates.push_back(std::move(cr));
    }

    rep.similar = !rep.matches.empty();
    for (auto& m : rep.matches)
        if (!m.trivial) ++rep.nontrivial_matches;
    return rep;
}

SimilarityReport symmetries(const RationalCurve3& x, const Options& opts) {
    SimilarityReport rep = similar3d(x, x, opts);
    // the identity similarity is always present for a self-comparison; keep
    // it in the list but out of the headline count (already handled by the
    // trivial flag)
    return rep;
}

} // namespace curvesim
