#pragma once

#include "curvesim/curves.hpp"
#include "curvesim/numberfield.hpp"
#include "curvesim/ratio_helical.hpp"

#include <deque>
#include <string>
#include <vector>

namespace curvesim {

// Definite zero tests. Plain rationals decide directly. Elements of
// Q(lambda0) are decided at the isolating interval of lambda0, splitting the
// modulus when a zero divisor shows up (the caller refines the branch and
// retries). Elements of one more extension level fork the branch worklist.
struct RationalPolicy {
    bool definite_zero(const Rational& e) const { return sgn(e) == 0; }
};

struct EmbeddedPolicy {
    AlgebraicNumber* alpha;
    bool definite_zero(const NFQ& e) const { return is_zero_embedded(e, *alpha); }
};

template <class K>
struct ForkPolicy {
    UniPoly<K> modulus;
    bool definite_zero(const NFElem<K>& e) const {
        if (e.is_zero()) return true;
        UniPoly<K> g = poly_gcd(e.rep(), modulus);
        if (g.degree() == 0) return false;
        throw ZeroDivisorSplit<K>(make_monic(g), modulus);
    }
};

// |lambda0|^2 ||x1'||^2 == ||(x2 o phi)'||^2 as an exact identity (Corollary
// of the fundamental diagram; squared form avoids radicals).
template <class K, class Policy>
bool arc_length_check_with(const Curve3T<K>& x1, const Curve3T<K>& x2, const Moebius<K>& phi,
                           const K& lambda0, const Policy& pol) {
    Curve3T<K> d1 = x1.derivative();
    RatFunT<K> lhs =
        (d1[0] * d1[0] + d1[1] * d1[1] + d1[2] * d1[2]) * (lambda0 * lambda0);
    Curve3T<K> x2phi = compose(x2, phi);
    Curve3T<K> d2 = x2phi.derivative();
    RatFunT<K> rhs = d2[0] * d2[0] + d2[1] * d2[1] + d2[2] * d2[2];
    UniPoly<K> diff = lhs.num * rhs.den - rhs.num * lhs.den;
    for (const auto& c : diff.coeffs())
        if (!pol.definite_zero(c)) return false;
    return true;
}

// Convenience rational-level entry (the spec-level operation).
inline bool arc_length_check(const RationalCurve3& x1, const RationalCurve3& x2,
                             const Moebius<Rational>& phi, const Rational& lambda0) {
    return arc_length_check_with(x1, x2, phi, lambda0, RationalPolicy{});
}

// An s0 branch of degree >= 2 that verified in the extension field.
template <class K>
struct ExtensionBranch {
    UniPoly<K> modulus; // minimal data: s0 satisfies this over K
    int real_roots = 0; // number of real embeddings (each one match)
    bool arc_ok = false;
};

template <class K>
struct MoebiusSearchResult {
    std::vector<Moebius<K>> transforms;       // s0 in the ground field, arc-checked
    std::vector<Moebius<K>> arc_failed;       // divided G but failed the arc condition
    std::vector<ExtensionBranch<K>> branches; // degree >= 2 verified branches
    std::array<UniPoly<K>, 4> abcd;           // transformation coefficients in s0
    std::vector<std::string> notes;
    bool inconclusive = false;
    Rational anchor_t0 = 0;
};

namespace detail_search {

// Number of real roots of h under the policy's embedding, by Sturm counting.
inline int real_root_count(const UniPoly<Rational>& h, const RationalPolicy&) {
    return sturm_count_all(h);
}

inline int real_root_count(const UniPoly<NFQ>& h, const EmbeddedPolicy& pol) {
    // Sturm sequence over Q(lambda0); signs at +-infinity via the embedding
    std::vector<UniPoly<NFQ>> seq;
    seq.push_back(h);
    UniPoly<NFQ> d = h.derivative();
    if (d.is_zero()) return 0;
    seq.push_back(d);
    while (true) {
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq.back();
        auto [q, r] = divrem_field(a, b);
        (void)q;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    auto vars = [&](bool at_minus) {
        int var = 0, prev = 0;
        for (const auto& f : seq) {
            if (f.is_zero()) continue;
            int s = sign_embedded(f.lc(), *pol.alpha);
            if (at_minus && (f.degree() % 2 == 1)) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    };
    return vars(true) - vars(false);
}

} // namespace detail_search

// Lift a rational function over K into the one-level extension.
template <class K>
RatFunT<NFElem<K>> ratfun_lift(const RatFunT<K>& f) {
    using E = NFElem<K>;
    RatFunT<E> r;
    r.num = f.num.template map_coeffs<E>([](const K& v) { return E(v); });
    r.den = f.den.template map_coeffs<E>([](const K& v) { return E(v); });
    return r;
}

// All Moebius transformations whose Moebius-like polynomial divides G, for a
// fixed ratio. Strategy: anchor at a t0 where G(t0, .) is squarefree with
// nonvanishing leading coefficient, reconstruct the transformation
// coefficients from the implicit derivatives of G at (t0, s0), and take s0
// over the roots of gcd_i P_i(s0). Roots in the ground field yield
// transforms; higher-degree factors are processed in one extension level with
// D5 forking, then counted for real embeddings.
template <class K, class Policy>
MoebiusSearchResult<K> moebius_like_factors_with(const BivarPoly<K>& G_in,
                                                 const Curve3T<K>& x1, const Curve3T<K>& x2,
                                                 const K& lambda0, const Policy& pol,
                                                 int max_ext_degree) {
    MoebiusSearchResult<K> out;
    if (G_in.is_zero() || G_in.deg_s() < 1) return out;

    // squarefree part (also removes t-only factors)
    BivarPoly<K> G = G_in;
    {
        BivarPoly<K> ds = G.derivative_s();
        if (!ds.is_zero()) {
            BivarPoly<K> g = gcd_bivar(G, ds);
            if (g.deg_s() >= 1 || g.deg_t() >= 1) {
                auto q = try_divexact_bivar(G, g);
                assert(q.has_value());
                G = normalize_bivar(*q);
            }
        }
        if (G.deg_s() < 1) return out;
    }

    // anchor: lc_s(G)(t0) definitely nonzero and G(t0, .) squarefree
    Rational t0;
    UniPoly<K> Gt0;
    bool anchored = false;
    long kk = 0;
    for (int tries = 0; tries < 400 && !anchored; ++tries) {
        Rational cand(kk);
        kk = kk > 0 ? -kk : -kk + 1;
        K ck = RingTraits<K>::from_rational(cand);
        K lcv = G.lc_s().eval(ck);
        if (pol.definite_zero(lcv)) continue;
        UniPoly<K> spec = G.eval_t(ck);
        UniPoly<K> g = poly_gcd(spec, spec.derivative());
        if (g.degree() >= 1) continue;
        t0 = cand;
        Gt0 = spec;
        anchored = true;
    }
    if (!anchored) {
        out.inconclusive = true;
        out.notes.push_back("no squarefree anchor t0 found");
        return out;
    }
    out.anchor_t0 = t0;

    auto abcd = moebius_coeff_polys<K>(G, t0);
    out.abcd = abcd;
    std::vector<UniPoly<K>> P = moebius_system<K>(G, abcd);
    UniPoly<K> g;
    for (const auto& p : P) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : poly_gcd(g, p);
        if (g.degree() == 0) break;
    }
    if (g.is_zero()) {
        out.inconclusive = true;
        out.notes.push_back("Moebius system vanished identically");
        return out;
    }
    if (g.degree() == 0) return out; // no Moebius-like factor
    {
        UniPoly<K> gp = poly_gcd(g, g.derivative());
        if (gp.degree() >= 1) g = divexact_poly(g, gp);
        g = make_monic(g);
    }

    UniPoly<K> delta_poly = abcd[0] * abcd[3] - abcd[1] * abcd[2];

    std::deque<UniPoly<K>> work{g};
    while (!work.empty()) {
        UniPoly<K> h = std::move(work.front());
        work.pop_front();
        if (h.degree() < 1) continue;
        // drop the part where the transformation degenerates (delta == 0)
        if (!delta_poly.is_zero()) {
            UniPoly<K> dg = poly_gcd(h, delta_poly);
            if (dg.degree() >= 1) {
                if (dg.degree() == h.degree()) continue; // whole branch degenerate
                h = make_monic(divexact_poly(h, dg));
                if (h.degree() < 1) continue;
            }
        } else {
            continue;
        }

        auto process_linear = [&](const K& s0) {
            Moebius<K> phi(abcd[0].eval(s0), abcd[1].eval(s0), abcd[2].eval(s0),
                           abcd[3].eval(s0));
            if (pol.definite_zero(phi.delta())) return;
            phi = phi.normalized();
            if (arc_length_check_with(x1, x2, phi, lambda0, pol))
                out.transforms.push_back(phi);
            else
                out.arc_failed.push_back(phi);
        };

        if (h.degree() == 1) {
            process_linear(RingTraits<K>::divexact(RingTraits<K>::zero() - h.coeff(0), h.coeff(1)));
            continue;
        }

        if constexpr (std::is_same_v<K, Rational>) {
            // pull the rational roots out exactly; the rest stays irreducible
            // over Q as far as this search is concerned
            bool reduced = false;
            for (auto& root : isolate_real_roots(h)) {
                if (!root.is_rational_val()) continue;
                Rational r = root.rational_value();
                process_linear(r);
                h = divexact_poly(h, UniPoly<Rational>(std::vector<Rational>{-r, 1}));
                reduced = true;
            }
            if (reduced) {
                if (h.degree() >= 1) work.push_back(make_monic(h));
                continue;
            }
        }

        if (h.degree() > max_ext_degree) {
            out.inconclusive = true;
            out.notes.push_back("s0 branch of degree " + std::to_string(h.degree()) +
                                " exceeds the supported extension degree");
            continue;
        }

        // one extension level: work in K[s0]/(h) and fork on zero divisors
        using E = NFElem<K>;
        try {
            auto ctx = make_nf_context<K>(h);
            E s0 = E::generator(ctx);
            auto lift = [&](const UniPoly<K>& p) {
                return p.template map_coeffs<E>([&](const K& v) { return E(v); }).eval(s0);
            };
            Moebius<E> phi(lift(abcd[0]), lift(abcd[1]), lift(abcd[2]), lift(abcd[3]));
            ForkPolicy<K> fpol{h};
            if (fpol.definite_zero(phi.delta())) continue;
            Curve3T<E> x1e{{ratfun_lift<K>(x1[0]), ratfun_lift<K>(x1[1]), ratfun_lift<K>(x1[2])}};
            Curve3T<E> x2e{{ratfun_lift<K>(x2[0]), ratfun_lift<K>(x2[1]), ratfun_lift<K>(x2[2])}};
            E lam0e = E(lambda0);
            bool arc = arc_length_check_with(x1e, x2e, phi, lam0e, fpol);
            ExtensionBranch<K> br;
            br.modulus = h;
            br.arc_ok = arc;
            if (arc) {
                br.real_roots = detail_search::real_root_count(h, pol);
                out.branches.push_back(std::move(br));
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
    return out;
}

// Spec-level entry point over the rationals.
inline MoebiusSearchResult<Rational> moebius_like_factors(const BivarPoly<Rational>& G,
                                                          const RationalCurve3& x1,
                                                          const RationalCurve3& x2,
                                                          const Rational& lambda0,
                                                          int max_ext_degree = 2) {
    return moebius_like_factors_with(G, x1, x2, lambda0, RationalPolicy{}, max_ext_degree);
}

} // namespace curvesim
