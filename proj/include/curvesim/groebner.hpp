#pragma once

#include "curvesim/bivar.hpp"

#include <deque>
#include <optional>

namespace curvesim {

// Buchberger's algorithm for ideals in Q[x, y] under lex order with x > y,
// sized for the small elimination steps of the ratio search. Polynomials are
// BivarPoly<Rational> with key (deg_x, deg_y); the map order is exactly lex,
// so the leading term is the last map entry.
namespace groebner {

using BPoly = BivarPoly<Rational>;
using Mono = std::pair<int, int>;

inline Mono lead_mono(const BPoly& p) {
    assert(!p.is_zero());
    return p.terms().rbegin()->first;
}
inline Rational lead_coeff(const BPoly& p) { return p.terms().rbegin()->second; }

inline bool mono_divides(const Mono& a, const Mono& b) {
    return a.first <= b.first && a.second <= b.second;
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
    return {std::max(a.first, b.first), std::max(a.second, b.second)};
}

inline BPoly mono_mul(const BPoly& p, const Mono& m, const Rational& c) {
    BPoly r;
    for (const auto& [k, v] : p.terms()) r.add_term(k.first + m.first, k.second + m.second, v * c);
    return r;
}

// integer-primitive associate with positive leading coefficient
inline BPoly primitive_scale(const BPoly& p) {
    if (p.is_zero()) return p;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [k, v] : p.terms()) {
        (void)k;
        Integer n = abs(Integer(v.get_num()));
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Integer d(v.get_den());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rational scale = make_ratio(den_lcm, num_gcd);
    if (sgn(lead_coeff(p)) < 0) scale = -scale;
    return p * scale;
}

// full normal form of p modulo the basis
inline BPoly reduce(BPoly p, const std::vector<BPoly>& basis) {
    BPoly rem;
    while (!p.is_zero()) {
        Mono lm = lead_mono(p);
        bool hit = false;
        for (const auto& g : basis) {
            Mono lg = lead_mono(g);
            if (!mono_divides(lg, lm)) continue;
            Rational f = lead_coeff(p) / lead_coeff(g);
            p = p - mono_mul(g, {lm.first - lg.first, lm.second - lg.second}, f);
            hit = true;
            break;
        }
        if (!hit) {
            Rational c = lead_coeff(p);
            rem.add_term(lm.first, lm.second, c);
            p.add_term(lm.first, lm.second, -c);
        }
    }
    return rem;
}

inline BPoly s_poly(const BPoly& f, const BPoly& g) {
    Mono lf = lead_mono(f), lg = lead_mono(g);
    Mono l = mono_lcm(lf, lg);
    BPoly a = mono_mul(f, {l.first - lf.first, l.second - lf.second},
                       Rational(1) / lead_coeff(f));
    BPoly b = mono_mul(g, {l.first - lg.first, l.second - lg.second},
                       Rational(1) / lead_coeff(g));
    return a - b;
}

// Groebner basis; nullopt when the pair-reduction budget is exhausted (the
// caller falls back to the resultant chain).
inline std::optional<std::vector<BPoly>> basis(std::vector<BPoly> gens, int budget = 4000) {
    std::vector<BPoly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(primitive_scale(g));
    if (G.empty()) return G;
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        if (--budget < 0) return std::nullopt;
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Mono li = lead_mono(G[i]), lj = lead_mono(G[j]);
        // product criterion: coprime leading monomials reduce to zero
        if (li.first + lj.first == mono_lcm(li, lj).first &&
            li.second + lj.second == mono_lcm(li, lj).second)
            continue;
        BPoly s = reduce(s_poly(G[i], G[j]), G);
        if (s.is_zero()) continue;
        s = primitive_scale(s);
        size_t idx = G.size();
        G.push_back(s);
        for (size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
    }
    // any Groebner basis (reduced or not) has the lex elimination property
    return G;
}

// Generator of the elimination ideal <gens> ∩ Q[y] (zero polynomial when the
// elimination ideal is trivial).
inline std::optional<UniPoly<Rational>> eliminate_x(const std::vector<BPoly>& gens,
                                                    int budget = 4000) {
    auto gb = basis(gens, budget);
    if (!gb) return std::nullopt;
    UniPoly<Rational> acc;
    for (const auto& g : *gb) {
        if (g.is_zero() || g.deg_t() > 0) continue; // deg_t is the x-slot
        UniPoly<Rational> yp;
        for (const auto& [k, v] : g.terms()) yp.set_coeff(k.second, v);
        acc = acc.is_zero() ? yp : poly_gcd(acc, yp);
    }
    return acc; // zero when no pure-y element exists
}

} // namespace groebner
} // namespace curvesim
