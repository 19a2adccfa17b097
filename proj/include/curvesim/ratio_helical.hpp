#pragma once

#include "curvesim/groebner.hpp"
#include "curvesim/ratio_nonhelical.hpp"

#include <array>

namespace curvesim {

// Smallest t0 from 0, 1, -1, 2, -2, ... such that the leading coefficient of
// G w.r.t. s does not vanish identically at t = t0.
inline Rational choose_t0(const LBivar& G) {
    assert(!G.is_zero());
    UniPoly<LPoly> lc = G.lc_s();
    long k = 0;
    for (int tries = 0; tries < 1000; ++tries) {
        Rational t0(k);
        k = k > 0 ? -k : -k + 1;
        if (!lc.eval(LPoly::constant(t0)).is_zero()) return t0;
    }
    throw std::logic_error("no valid t0 found");
}

// S1: nonzero real roots of L(lambda) = lc_s(G)(t0).
// S2: nonzero real lambda admitting a common complex root s of G(t0,s) and
//     dG/ds(t0,s), found by eliminating s with the Sylvester resultant.
inline std::pair<std::vector<AlgebraicNumber>, std::vector<AlgebraicNumber>> sets_S1_S2(
    const LBivar& G, const Rational& t0) {
    LPoly t0c = LPoly::constant(t0);
    LPoly L = G.lc_s().eval(t0c);
    std::vector<AlgebraicNumber> S1, S2;
    if (L.degree() >= 1) S1 = detail_ratio::finish_candidates(L).roots;

    UniPoly<LPoly> Gt0 = G.eval_t(t0c);
    UniPoly<LPoly> dG = Gt0.derivative();
    if (Gt0.degree() >= 1 && dG.degree() >= 0) {
        LPoly R = resultant(Gt0, dG);
        if (R.is_zero()) {
            // G(t0, s) has a repeated factor for every lambda; all ratios are
            // suspect at this anchor, which the caller treats as collapse
            throw EliminationCollapse();
        }
        if (R.degree() >= 1) S2 = detail_ratio::finish_candidates(R).roots;
    }
    return {S1, S2};
}

// Coefficients of the Moebius transformation through (t0, s0) implicitly
// defined by G(t, s) = 0, as polynomials in s0 (and whatever ring G's
// coefficients live in): common polynomial factor of all four stripped.
template <class KC>
std::array<UniPoly<KC>, 4> moebius_coeff_polys(const BivarPoly<KC>& G, const Rational& t0) {
    KC t0k = RingTraits<KC>::from_rational(t0);
    BivarPoly<KC> dGt = G.derivative_t();
    BivarPoly<KC> dGs = G.derivative_s();
    UniPoly<KC> Gt = dGt.eval_t(t0k);
    UniPoly<KC> Gs = dGs.eval_t(t0k);
    UniPoly<KC> Gtt = dGt.derivative_t().eval_t(t0k);
    UniPoly<KC> Gts = dGt.derivative_s().eval_t(t0k);
    UniPoly<KC> Gss = dGs.derivative_s().eval_t(t0k);

    UniPoly<KC> W = Gs * Gs * Gtt - Gt * Gs * Gts * ring_from_uint<KC>(2) + Gt * Gt * Gss;
    UniPoly<KC> s0 = UniPoly<KC>::variable();
    KC two = ring_from_uint<KC>(2);
    UniPoly<KC> a = -(W * s0) - Gt * Gt * Gs * two;
    UniPoly<KC> b = (W * s0) * t0k + (Gt * Gs * Gs * s0) * two + Gt * Gt * Gs * (two * t0k);
    UniPoly<KC> c = -W;
    UniPoly<KC> d = W * t0k + Gt * Gs * Gs * two;

    // strip the common polynomial factor to control degree growth
    UniPoly<KC> g = poly_gcd(poly_gcd(a, b), poly_gcd(c, d));
    if (g.degree() >= 1) {
        a = divexact_poly(a, g);
        b = divexact_poly(b, g);
        c = divexact_poly(c, g);
        d = divexact_poly(d, g);
    }
    if constexpr (!RingTraits<KC>::is_field) {
        // also strip content common to every coefficient (e.g. a stray
        // lambda factor, invisible to the s0-degree test above)
        KC call = RingTraits<KC>::zero();
        bool first = true;
        for (const auto* p : {&a, &b, &c, &d})
            for (const auto& v : p->coeffs()) {
                if (RingTraits<KC>::is_zero(v)) continue;
                call = first ? v : RingTraits<KC>::gcd(call, v);
                first = false;
            }
        if (!first && !RingTraits<KC>::is_zero(call)) {
            bool unit = false;
            if constexpr (std::is_same_v<KC, UniPoly<Rational>>) unit = call.degree() == 0;
            if (!unit) {
                auto strip = [&](UniPoly<KC>& p) {
                    p = p.template map_coeffs<KC>(
                        [&](const KC& v) { return RingTraits<KC>::divexact(v, call); });
                };
                strip(a);
                strip(b);
                strip(c);
                strip(d);
            }
        }
    }
    return {a, b, c, d};
}

// Coefficients P_i(s0, ...) of P(t) = (c t + d)^n G(t, (a t + b)/(c t + d)).
template <class KC>
std::vector<UniPoly<KC>> moebius_system(const BivarPoly<KC>& G,
                                        const std::array<UniPoly<KC>, 4>& abcd) {
    using R = UniPoly<KC>;
    int n = G.deg_s();
    UniPoly<R> At(std::vector<R>{abcd[1], abcd[0]}); // b + a t
    UniPoly<R> Ct(std::vector<R>{abcd[3], abcd[2]}); // d + c t
    std::vector<UniPoly<R>> up(n + 1), dn(n + 1);
    up[0] = dn[0] = UniPoly<R>::constant(RingTraits<R>::one());
    for (int i = 1; i <= n; ++i) {
        up[i] = up[i - 1] * At;
        dn[i] = dn[i - 1] * Ct;
    }
    UniPoly<UniPoly<KC>> Gm = G.s_major();
    UniPoly<R> acc;
    for (int j = 0; j <= n; ++j) {
        if (Gm.coeff(j).is_zero()) continue;
        UniPoly<R> Gj = Gm.coeff(j).template map_coeffs<R>(
            [](const KC& v) { return R::constant(v); });
        acc = acc + Gj * up[j] * dn[n - j];
    }
    std::vector<UniPoly<KC>> out;
    out.reserve(acc.degree() + 1);
    for (int i = 0; i <= acc.degree(); ++i) out.push_back(acc.coeff(i));
    return out;
}

struct HelicalEliminationData {
    LBivar G;
    Rational t0;
    UniPoly<Rational> L;                         // lc_s(G)(t0), polynomial in lambda
    std::vector<UniPoly<UniPoly<Rational>>> P;   // P_i(s0; lambda), s0-major
};

namespace detail_helical {

using RS = UniPoly<UniPoly<Rational>>; // polynomials in s0 over Q[lambda]

// gcd of resultants Res_{s0}(anchor, P_j), skipping identically-zero pairs
// (a vanishing resultant constrains nothing, like gcd with 0). Returns an
// empty optional when no pair is informative.
inline std::optional<UniPoly<Rational>> resultant_chain(const RS& anchor,
                                                        const std::vector<RS>& P,
                                                        const RS* skip = nullptr) {
    UniPoly<Rational> acc;
    bool have = false;
    int stable = 0;
    for (const auto& p : P) {
        if (skip && &p == skip) continue;
        if (anchor.degree() < 1 || p.degree() < 1) continue;
        LPoly R = resultant(anchor, p);
        if (R.is_zero()) continue;
        UniPoly<Rational> next = have ? poly_gcd(acc, R) : make_monic(R);
        if (have && next == acc)
            ++stable;
        else
            stable = 0;
        acc = next;
        have = true;
        if (stable >= 2 || acc.degree() == 0) break;
    }
    if (!have) return std::nullopt;
    return acc;
}

} // namespace detail_helical

// Candidate ratios for a helical pair via elimination of s0 from the ideal
// <P_i>. Realized as gcds of resultant chains: small systems use the pivot
// Res_{s0}(P_min, P_j) chain; large systems anchor one side at
// Q0(s0,lambda) = G(t0, s0), whose low s0-degree keeps the chain cheap. The
// chains only over-approximate the elimination ideal; every candidate is
// verified downstream.
inline CandidateRatios candidate_ratios_helical(const LBivar& G, const Rational& t0,
                                                HelicalEliminationData* data_out = nullptr) {
    using detail_helical::RS;
    auto abcd = moebius_coeff_polys<LPoly>(G, t0);
    if (abcd[0].is_zero() && abcd[1].is_zero() && abcd[2].is_zero() && abcd[3].is_zero())
        throw EliminationCollapse();
    std::vector<RS> P = moebius_system<LPoly>(G, abcd);
    std::vector<RS> nonzero;
    for (auto& p : P)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) throw EliminationCollapse();

    if (data_out) {
        data_out->G = G;
        data_out->t0 = t0;
        data_out->L = G.lc_s().eval(LPoly::constant(t0));
        data_out->P = nonzero;
    }

    RS delta = abcd[0] * abcd[3] - abcd[1] * abcd[2];
    // delta identically zero means every reconstructed transformation at this
    // anchor is degenerate (happens e.g. when G_t(t0, .) vanishes, so the
    // implicit function anchor carries no information): the caller must move
    // to another t0
    if (delta.is_zero()) throw EliminationCollapse();
    UniPoly<Rational> lambda_only_factor = UniPoly<Rational>::constant(1);

    // A positive-degree factor common to every P_i is a whole component of
    // solutions. Components inside the degenerate locus (delta = 0, or a
    // lambda-only factor) are split off; a surviving s0-dependent component
    // means a genuine continuum of ratios.
    for (int rounds = 0; rounds < 8; ++rounds) {
        int maxdeg = 0;
        for (const auto& p : nonzero) maxdeg = std::max(maxdeg, p.degree());
        size_t pivot = 0;
        for (size_t i = 1; i < nonzero.size(); ++i)
            if (nonzero[i].degree() < nonzero[pivot].degree()) pivot = i;

        constexpr int kGroebnerThreshold = 36;
        if (maxdeg <= kGroebnerThreshold && rounds == 0) {
            // small system: eliminate s0 exactly (lex Groebner basis), which
            // reproduces the principal generator of the elimination ideal
            std::vector<groebner::BPoly> gens;
            for (const auto& p : nonzero) {
                groebner::BPoly b;
                for (int i = 0; i <= p.degree(); ++i)
                    for (int j = 0; j <= p.coeff(i).degree(); ++j)
                        b.add_term(i, j, p.coeff(i).coeff(j));
                gens.push_back(std::move(b));
            }
            auto gen = groebner::eliminate_x(gens);
            if (gen && !gen->is_zero() && gen->degree() >= 1)
                return detail_ratio::finish_candidates(*gen);
            if (gen && gen->is_zero()) throw EliminationCollapse();
            // budget exhausted: fall through to the resultant chain
        }

        constexpr int kDirectThreshold = 48;
        std::optional<UniPoly<Rational>> acc;
        if (maxdeg > kDirectThreshold) {
            RS anchor = G.eval_t(LPoly::constant(t0)); // Q0(s0, lambda)
            acc = detail_helical::resultant_chain(anchor, nonzero);
        } else {
            acc = detail_helical::resultant_chain(nonzero[pivot], nonzero, &nonzero[pivot]);
            if (!acc) {
                for (size_t i = 0; i < nonzero.size() && !acc; ++i)
                    acc = detail_helical::resultant_chain(nonzero[i], nonzero, &nonzero[i]);
            }
            if (!acc && nonzero.size() >= 2) {
                // pairs of generic linear combinations of the whole system
                for (int theta = 1; theta <= 3 && !acc; ++theta) {
                    RS c1, c2;
                    LPoly th1(std::vector<Rational>{Rational(theta)});
                    LPoly th2(std::vector<Rational>{Rational(theta + 1)});
                    LPoly pw1 = LPoly::constant(1), pw2 = LPoly::constant(1);
                    for (const auto& p : nonzero) {
                        c1 = c1 + p * RS::constant(pw1);
                        c2 = c2 + p * RS::constant(pw2);
                        pw1 = pw1 * th1;
                        pw2 = pw2 * th2;
                    }
                    std::vector<RS> pair{c2};
                    acc = detail_helical::resultant_chain(c1, pair);
                }
            }
        }
        if (acc) {
            UniPoly<Rational> Lraw = *acc;
            if (lambda_only_factor.degree() >= 1) Lraw = Lraw * lambda_only_factor;
            return detail_ratio::finish_candidates(Lraw);
        }

        // every informative pair vanished: analyze the global common factor
        RS g_all;
        for (const auto& p : nonzero)
            g_all = g_all.is_zero() ? p : poly_gcd(g_all, p);
        if (g_all.degree() < 1 && poly_content(g_all).degree() < 1) throw EliminationCollapse();
        // lambda-only content of the common factor: those ratios annihilate
        // the entire system and are genuine candidates
        LPoly content = poly_content(g_all);
        if (content.degree() >= 1) lambda_only_factor = lambda_only_factor * content;
        // split off components of the degenerate locus
        RS rest = g_all.template map_coeffs<LPoly>(
            [&](const LPoly& v) { return content.degree() >= 1 ? divexact_poly(v, content) : v; });
        while (rest.degree() >= 1) {
            RS dg = poly_gcd(rest, delta);
            if (dg.degree() < 1) break;
            rest = divexact_poly(rest, dg);
        }
        if (rest.degree() >= 1) throw EliminationCollapse(); // non-degenerate continuum
        // strip the common factor (entirely degenerate or lambda-only) and retry
        std::vector<RS> stripped;
        for (const auto& p : nonzero) {
            auto q = try_divexact(p, g_all);
            assert(q.has_value());
            if (!q->is_zero()) stripped.push_back(*q);
        }
        if (stripped.empty()) {
            if (lambda_only_factor.degree() >= 1)
                return detail_ratio::finish_candidates(lambda_only_factor);
            throw EliminationCollapse();
        }
        nonzero = std::move(stripped);
    }
    throw EliminationCollapse();
}

// Iterate anchors t0 (optionally starting from a user-supplied list) until
// the elimination succeeds; reports the t0 actually used so S1/S2 can be
// formed at the same anchor.
inline std::pair<CandidateRatios, Rational> candidate_ratios_helical_auto(
    const LBivar& G, const std::vector<Rational>& preferred = {},
    HelicalEliminationData* data_out = nullptr) {
    UniPoly<LPoly> lc = G.lc_s();
    std::vector<Rational> tried;
    auto attempt = [&](const Rational& t0) -> std::optional<CandidateRatios> {
        if (lc.eval(LPoly::constant(t0)).is_zero()) return std::nullopt;
        try {
            return candidate_ratios_helical(G, t0, data_out);
        } catch (const EliminationCollapse&) {
            return std::nullopt;
        }
    };
    for (const auto& t0 : preferred) {
        auto r = attempt(t0);
        if (r) return {*r, t0};
    }
    long k = 0;
    for (int tries = 0; tries < 64; ++tries) {
        Rational t0(k);
        k = k > 0 ? -k : -k + 1;
        auto r = attempt(t0);
        if (r) return {*r, t0};
    }
    throw EliminationCollapse();
}

} // namespace curvesim
