#pragma once

#include "curvesim/algebraic.hpp"
#include "curvesim/bivar.hpp"
#include "curvesim/curves.hpp"

#include <stdexcept>

namespace curvesim {

using LPoly = UniPoly<Rational>;   // polynomials in lambda
using LBivar = BivarPoly<LPoly>;   // (t, s) with lambda-polynomial coefficients

// K_lambda(t,s) = A1(t)B2(s) - lambda^2 A2(s)B1(t)
// T_lambda(t,s) = C1(t)D2(s) - lambda   C2(s)D1(t)
// stored with integer-primitive coefficients and a deterministic sign.
struct LambdaPolys {
    LBivar K, T;
};

struct CandidateRatios {
    UniPoly<Rational> Lambda_raw;         // as accumulated by the gcd chain, monic
    UniPoly<Rational> Lambda;             // squarefree part
    std::vector<AlgebraicNumber> roots;   // nonzero real roots, sorted
};

struct HelicalDegeneracy : std::runtime_error {
    HelicalDegeneracy()
        : std::runtime_error("specialized resultants vanish identically: helical pair with "
                             "matching |mu|, use the helical ratio search") {}
};

struct EliminationCollapse : std::runtime_error {
    EliminationCollapse()
        : std::runtime_error("elimination collapsed: Moebius-like factors exist for a continuum "
                             "of ratios (degenerate input)") {}
};

namespace detail_ratio {

// Normalize a lambda-carrying bivariate polynomial: strip the polynomial
// content in lambda and the rational content, and fix the sign of the
// lexicographically leading (s, t) term.
inline LBivar normalize_lambda_bivar(const LBivar& p) {
    if (p.is_zero()) return p;
    LPoly content;
    bool first = true;
    for (const auto& [k, v] : p.terms()) {
        (void)k;
        content = first ? v : poly_gcd(content, v);
        first = false;
        if (content.degree() == 0) break;
    }
    LBivar q = p;
    if (content.degree() >= 1)
        q = p.map_coeffs<LPoly>([&](const LPoly& v) { return divexact_poly(v, content); });
    // rational content: gcd of all numerators over lcm of denominators
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [k, v] : q.terms()) {
        (void)k;
        for (const auto& r : v.coeffs()) {
            if (sgn(r) == 0) continue;
            Integer n = abs(Integer(r.get_num()));
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            Integer d(r.get_den());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
    }
    Rational scale = make_ratio(den_lcm, num_gcd);
    if (deep_sign(q.lex_lead()) < 0) scale = -scale;
    return q.map_coeffs<LPoly>([&](const LPoly& v) { return v * scale; });
}

} // namespace detail_ratio

inline LambdaPolys build_KT(const DifferentialInvariants& i1, const DifferentialInvariants& i2) {
    auto lift = [](const UniPoly<Rational>& p) {
        return p.map_coeffs<LPoly>([](const Rational& v) { return LPoly::constant(v); });
    };
    LPoly lam = LPoly::variable();
    LPoly lam2 = lam * lam;
    LBivar K = outer_product(lift(i1.A), lift(i2.B)) -
               outer_product(lift(i1.B), lift(i2.A)) * lam2;
    LBivar T = outer_product(lift(i1.C), lift(i2.D)) -
               outer_product(lift(i1.D), lift(i2.C)) * lam;
    return {detail_ratio::normalize_lambda_bivar(K), detail_ratio::normalize_lambda_bivar(T)};
}

// Substitute a concrete ratio for lambda.
template <class K>
BivarPoly<K> specialize_lambda(const LBivar& p, const K& lambda0) {
    return p.template map_coeffs<K>([&](const LPoly& v) { return poly_eval_in<K>(v, lambda0); });
}

namespace detail_ratio {

// Post-processing of the Lambda polynomial into candidate roots: squarefree
// part, real roots, rational and pure-quadratic recognition, and narrowing of
// the remaining defining polynomials by the recognized factors.
inline CandidateRatios finish_candidates(const UniPoly<Rational>& Lambda_raw) {
    CandidateRatios out;
    if (Lambda_raw.is_zero() || Lambda_raw.degree() == 0) {
        out.Lambda = Lambda_raw.is_zero() ? Lambda_raw : make_monic(Lambda_raw);
        out.Lambda_raw = out.Lambda;
        return out;
    }
    out.Lambda_raw = make_monic(Lambda_raw);
    out.Lambda = squarefree_part(Lambda_raw);
    std::vector<AlgebraicNumber> roots = isolate_real_roots(out.Lambda);
    std::vector<UniPoly<Rational>> recognized;
    for (auto& r : roots) {
        if (r.is_rational_val()) continue;
        if (recognize_pure_quadratic(r)) recognized.push_back(r.defining);
    }
    for (auto& r : roots) {
        if (r.is_rational_val() || r.defining.degree() <= 2) continue;
        for (const auto& q : recognized) restrict_defining(r, q);
    }
    for (auto& r : roots) {
        if (r.is_rational_val() && sgn(r.rational_value()) == 0) continue; // lambda != 0
        out.roots.push_back(std::move(r));
    }
    return out;
}

} // namespace detail_ratio

// Ratio candidates for a non-helical pair: Lambda(lambda) assembled from the
// gcd of resultants Res_s(K,T) specialized at several rational t0, times the
// content in t of gcd(lc_s K, lc_s T). Candidates only over-approximate; every
// survivor is verified downstream.
inline CandidateRatios candidate_ratios(const LambdaPolys& kt) {
    const LBivar& K = kt.K;
    const LBivar& T = kt.T;
    int dsK = K.deg_s(), dsT = T.deg_s();
    if (dsK < 1 || dsT < 1)
        throw std::invalid_argument("K or T has no s-dependence; invariants degenerate");

    // The K/T coefficients are primitive integers by construction and the
    // specialization points are integers, so each specialized resultant is a
    // lambda-polynomial with integer coefficients of degree at most
    // 2 deg_s(T) + deg_s(K). It is cheapest to recover it by evaluating
    // lambda at integers, computing plain integer resultants, and
    // interpolating.
    auto eval_int = [](const UniPoly<LPoly>& p, const Rational& lk) -> UniPoly<Integer> {
        std::vector<Integer> c(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) {
            Rational v = p.coeff(i).eval(lk);
            assert(v.get_den() == 1);
            c[i] = v.get_num();
        }
        return UniPoly<Integer>(std::move(c));
    };
    int lambda_bound = 2 * dsT + dsK;
    auto specialized_resultant = [&](const UniPoly<LPoly>& Ks,
                                     const UniPoly<LPoly>& Ts) -> LPoly {
        std::vector<Rational> xs, ys;
        long lk = 0;
        for (int tries = 0; (int)xs.size() <= lambda_bound && tries < 4 * lambda_bound + 64;
             ++tries) {
            Rational pt(lk);
            lk = lk > 0 ? -lk : -lk + 1;
            if (sgn(Ks.lc().eval(pt)) == 0 || sgn(Ts.lc().eval(pt)) == 0) continue;
            UniPoly<Integer> a = eval_int(Ks, pt), b = eval_int(Ts, pt);
            Integer r = resultant(a, b);
            xs.push_back(pt);
            ys.emplace_back(r);
        }
        if ((int)xs.size() <= lambda_bound) return resultant(Ks, Ts); // fallback
        return interpolate(xs, ys);
    };

    UniPoly<Rational> acc; // zero = gcd identity
    int valid = 0, stable = 0, zero_streak = 0;
    long k = 0;
    for (int tries = 0; tries < 400; ++tries) {
        Rational t0(k);
        k = k > 0 ? -k : -k + 1;
        LPoly t0c = LPoly::constant(t0);
        UniPoly<LPoly> Ks = K.eval_t(t0c);
        UniPoly<LPoly> Ts = T.eval_t(t0c);
        if (Ks.degree() != dsK || Ts.degree() != dsT) continue; // leading coefficient dropped
        LPoly R = specialized_resultant(Ks, Ts);
        if (R.is_zero()) {
            if (++zero_streak >= 5 && valid == 0) throw HelicalDegeneracy();
            continue;
        }
        zero_streak = 0;
        ++valid;
        UniPoly<Rational> next = valid == 1 ? make_monic(R) : poly_gcd(acc, R);
        if (valid > 1 && next == acc)
            ++stable;
        else
            stable = 0;
        acc = next;
        if (valid >= 3 && stable >= 2) break;
        if (acc.degree() == 0) break; // no candidates from the resultants
        // once the accumulated gcd is already small, further sampling cannot
        // pay for itself: downstream verification filters every candidate
        if (valid >= 2 && acc.degree() <= 8) break;
    }
    if (valid == 0) throw HelicalDegeneracy();

    // lc-content term: content_t(gcd(lc_s K, lc_s T)), a polynomial in lambda
    UniPoly<LPoly> lcK = K.lc_s(), lcT = T.lc_s();
    auto to_tl = [](const UniPoly<LPoly>& p) { // (t; lambda) -> BivarPoly vars (t, lambda)
        BivarPoly<Rational> r;
        for (int i = 0; i <= p.degree(); ++i)
            for (int j = 0; j <= p.coeff(i).degree(); ++j) r.add_term(i, j, p.coeff(i).coeff(j));
        return r;
    };
    BivarPoly<Rational> lcg = gcd_bivar(to_tl(lcK), to_tl(lcT));
    UniPoly<Rational> lc_content = content_wrt(lcg, true);

    UniPoly<Rational> Lambda = acc.degree() >= 1 ? acc : UniPoly<Rational>::constant(1);
    if (lc_content.degree() >= 1) Lambda = Lambda * lc_content;
    return detail_ratio::finish_candidates(Lambda);
}

// Direct route: content in t of the full trivariate resultant Res_s(K, T).
// Exponentially heavier than the specialization strategy; used as an oracle
// and as a fallback on small inputs.
inline UniPoly<Rational> lambda_content_direct(const LambdaPolys& kt) {
    UniPoly<LPoly> R = resultant(kt.K.s_major(), kt.T.s_major());
    if (R.is_zero()) throw HelicalDegeneracy();
    UniPoly<Rational> content;
    bool first = true;
    for (int i = 0; i <= R.degree(); ++i) {
        if (R.coeff(i).is_zero()) continue;
        content = first ? make_monic(R.coeff(i)) : poly_gcd(content, R.coeff(i));
        first = false;
        if (content.degree() == 0) break;
    }
    return content;
}

// H(t,s) = A1(t)B2(s)C2^2(s)D1^2(t) - A2(s)B1(t)C1^2(t)D2^2(s); the
// Moebius-like factors of H contain every reparametrization candidate
// (lambda-free alternative route).
inline BivarPoly<Rational> build_H(const DifferentialInvariants& i1,
                                   const DifferentialInvariants& i2) {
    return outer_product(i1.A * (i1.D * i1.D), i2.B * (i2.C * i2.C)) -
           outer_product(i1.B * (i1.C * i1.C), i2.A * (i2.D * i2.D));
}

// The ratio lambda0 = C1(t) D2(phi(t)) / (C2(phi(t)) D1(t)) when constant.
template <class K>
std::optional<K> ratio_from_moebius(const Moebius<K>& phi, const DifferentialInvariants& i1,
                                    const DifferentialInvariants& i2) {
    RatFunT<K> d2phi = compose_ratfun_moebius(RatFunT<K>::from_poly(poly_cast<K>(i2.D)), phi);
    RatFunT<K> c2phi = compose_ratfun_moebius(RatFunT<K>::from_poly(poly_cast<K>(i2.C)), phi);
    RatFunT<K> den = c2phi * RatFunT<K>::from_poly(poly_cast<K>(i1.D));
    if (den.is_zero()) return std::nullopt;
    RatFunT<K> q = RatFunT<K>::from_poly(poly_cast<K>(i1.C)) * d2phi / den;
    if (!q.is_constant()) return std::nullopt;
    return q.num.is_zero() ? RingTraits<K>::zero() : q.num.coeff(0);
}

} // namespace curvesim
