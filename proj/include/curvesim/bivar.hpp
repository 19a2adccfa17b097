#pragma once

#include "curvesim/unipoly.hpp"

#include <map>
#include <utility>

namespace curvesim {

// Sparse bivariate polynomial in (t, s); no zero coefficients stored.
template <class K>
class BivarPoly {
  public:
    using Key = std::pair<int, int>; // (deg_t, deg_s)

    BivarPoly() = default;

    static BivarPoly zero() { return {}; }
    static BivarPoly constant(K v) {
        BivarPoly p;
        p.add_term(0, 0, std::move(v));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, K>& terms() const { return terms_; }

    void add_term(int dt, int ds, K v) {
        if (RingTraits<K>::is_zero(v)) return;
        auto it = terms_.find({dt, ds});
        if (it == terms_.end()) {
            terms_.emplace(Key{dt, ds}, std::move(v));
        } else {
            it->second = it->second + v;
            if (RingTraits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    K coeff(int dt, int ds) const {
        auto it = terms_.find({dt, ds});
        return it == terms_.end() ? RingTraits<K>::zero() : it->second;
    }

    int deg_t() const {
        int d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first);
        return d;
    }
    int deg_s() const {
        int d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.second);
        return d;
    }

    friend BivarPoly operator+(const BivarPoly& x, const BivarPoly& y) {
        BivarPoly r = x;
        for (const auto& [k, v] : y.terms_) r.add_term(k.first, k.second, v);
        return r;
    }
    friend BivarPoly operator-(const BivarPoly& x, const BivarPoly& y) {
        BivarPoly r = x;
        for (const auto& [k, v] : y.terms_) r.add_term(k.first, k.second, RingTraits<K>::zero() - v);
        return r;
    }
    BivarPoly operator-() const {
        BivarPoly r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, RingTraits<K>::zero() - v);
        return r;
    }
    friend BivarPoly operator*(const BivarPoly& x, const BivarPoly& y) {
        BivarPoly r;
        for (const auto& [ka, va] : x.terms_)
            for (const auto& [kb, vb] : y.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    friend BivarPoly operator*(const BivarPoly& x, const K& c) {
        BivarPoly r;
        if (RingTraits<K>::is_zero(c)) return r;
        for (const auto& [k, v] : x.terms_) r.add_term(k.first, k.second, v * c);
        return r;
    }
    friend bool operator==(const BivarPoly& x, const BivarPoly& y) { return (x - y).is_zero(); }
    friend bool operator!=(const BivarPoly& x, const BivarPoly& y) { return !(x == y); }

    BivarPoly swap_vars() const {
        BivarPoly r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(Key{k.second, k.first}, v);
        return r;
    }

    // polynomial in s whose coefficients are polynomials in t (outer index s)
    UniPoly<UniPoly<K>> s_major() const {
        std::vector<UniPoly<K>> cs(deg_s() + 1);
        std::vector<std::vector<K>> raw(deg_s() + 1);
        for (const auto& [k, v] : terms_) {
            auto& row = raw[k.second];
            if ((int)row.size() <= k.first) row.resize(k.first + 1, RingTraits<K>::zero());
            row[k.first] = v;
        }
        for (size_t j = 0; j < raw.size(); ++j) cs[j] = UniPoly<K>(std::move(raw[j]));
        return UniPoly<UniPoly<K>>(std::move(cs));
    }
    UniPoly<UniPoly<K>> t_major() const { return swap_vars().s_major(); }

    static BivarPoly from_s_major(const UniPoly<UniPoly<K>>& p) {
        BivarPoly r;
        for (int j = 0; j <= p.degree(); ++j) {
            const UniPoly<K>& cj = p.coeff(j);
            for (int i = 0; i <= cj.degree(); ++i) r.add_term(i, j, cj.coeff(i));
        }
        return r;
    }
    static BivarPoly from_t_major(const UniPoly<UniPoly<K>>& p) {
        return from_s_major(p).swap_vars();
    }

    UniPoly<K> lc_s() const { // leading coefficient w.r.t. s, a polynomial in t
        int ds = deg_s();
        std::vector<K> row;
        for (const auto& [k, v] : terms_)
            if (k.second == ds) {
                if ((int)row.size() <= k.first) row.resize(k.first + 1, RingTraits<K>::zero());
                row[k.first] = v;
            }
        return UniPoly<K>(std::move(row));
    }

    UniPoly<K> eval_t(const K& c) const { // substitute t = c
        int dt = deg_t();
        std::vector<K> pow(dt + 1, RingTraits<K>::one());
        for (int i = 1; i <= dt; ++i) pow[i] = pow[i - 1] * c;
        std::vector<K> out(deg_s() + 1, RingTraits<K>::zero());
        for (const auto& [k, v] : terms_) out[k.second] = out[k.second] + v * pow[k.first];
        return UniPoly<K>(std::move(out));
    }
    UniPoly<K> eval_s(const K& c) const { return swap_vars().eval_t(c); }

    BivarPoly derivative_t() const {
        BivarPoly r;
        for (const auto& [k, v] : terms_)
            if (k.first >= 1) r.add_term(k.first - 1, k.second, v * ring_from_uint<K>(k.first));
        return r;
    }
    BivarPoly derivative_s() const {
        BivarPoly r;
        for (const auto& [k, v] : terms_)
            if (k.second >= 1) r.add_term(k.first, k.second - 1, v * ring_from_uint<K>(k.second));
        return r;
    }

    template <class K2, class Fn>
    BivarPoly<K2> map_coeffs(Fn&& f) const {
        BivarPoly<K2> r;
        for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, f(v));
        return r;
    }

    // coefficient of the lexicographically leading monomial (s, then t)
    K lex_lead() const {
        assert(!is_zero());
        int ds = deg_s(), dt = -1;
        for (const auto& [k, v] : terms_)
            if (k.second == ds) dt = std::max(dt, k.first);
        return coeff(dt, ds);
    }

  private:
    std::map<Key, K> terms_;
};

// Outer product u(t) * v(s).
template <class K>
BivarPoly<K> outer_product(const UniPoly<K>& u, const UniPoly<K>& v) {
    BivarPoly<K> r;
    for (int i = 0; i <= u.degree(); ++i) {
        if (RingTraits<K>::is_zero(u.coeff(i))) continue;
        for (int j = 0; j <= v.degree(); ++j) r.add_term(i, j, u.coeff(i) * v.coeff(j));
    }
    return r;
}

// Content with respect to `in_t` (true: view as polynomial in t), i.e. the
// gcd of the coefficients, which are polynomials in the other variable.
template <class K>
UniPoly<K> content_wrt(const BivarPoly<K>& p, bool in_t) {
    UniPoly<UniPoly<K>> nested = in_t ? p.t_major() : p.s_major();
    UniPoly<K> g;
    for (int i = 0; i <= nested.degree(); ++i) {
        if (nested.coeff(i).is_zero()) continue;
        g = g.is_zero() ? nested.coeff(i) : poly_gcd(g, nested.coeff(i));
        if (g.degree() == 0) break;
    }
    return g;
}

// Sylvester resultant with respect to s: a polynomial in t.
template <class K>
UniPoly<K> resultant_s(const BivarPoly<K>& p, const BivarPoly<K>& q) {
    return resultant(p.s_major(), q.s_major());
}

template <class K>
std::optional<BivarPoly<K>> try_divexact_bivar(const BivarPoly<K>& a, const BivarPoly<K>& b) {
    auto q = try_divexact(a.s_major(), b.s_major());
    if (!q) return std::nullopt;
    return BivarPoly<K>::from_s_major(*q);
}

template <class K>
bool divides_bivar(const BivarPoly<K>& f, const BivarPoly<K>& g) {
    if (g.is_zero()) return true;
    if (f.is_zero()) return false;
    return try_divexact_bivar(g, f).has_value();
}

// Scale so the lex-leading coefficient becomes 1 (field coefficients).
template <class K>
BivarPoly<K> normalize_bivar(const BivarPoly<K>& p) {
    static_assert(RingTraits<K>::is_field);
    if (p.is_zero()) return p;
    K inv = RingTraits<K>::divexact(RingTraits<K>::one(), p.lex_lead());
    return p * inv;
}

// Strip the content w.r.t. s (gcd of the t-polynomial coefficients).
template <class K>
BivarPoly<K> primitive_part_s(const BivarPoly<K>& p, UniPoly<K>* content_out = nullptr) {
    if (p.is_zero()) return p;
    UniPoly<K> c = content_wrt(p, false);
    if (content_out) *content_out = c;
    if (c.degree() == 0) {
        if (content_out) *content_out = c;
        return p;
    }
    auto nested = p.s_major();
    std::vector<UniPoly<K>> out(nested.degree() + 1);
    for (int j = 0; j <= nested.degree(); ++j)
        out[j] = nested.coeff(j).is_zero() ? UniPoly<K>{} : divexact_poly(nested.coeff(j), c);
    return BivarPoly<K>::from_s_major(UniPoly<UniPoly<K>>(std::move(out)));
}

namespace detail_bivar {

// Subresultant PRS route for the primitive-part gcd (fallback and oracle).
template <class K>
BivarPoly<K> gcd_pp_prs(const BivarPoly<K>& pa, const BivarPoly<K>& pb) {
    UniPoly<UniPoly<K>> A = pa.s_major(), B = pb.s_major();
    UniPoly<UniPoly<K>> last = subresultant_prs_last(A, B);
    if (last.degree() == 0) return BivarPoly<K>::constant(RingTraits<K>::one());
    BivarPoly<K> g = BivarPoly<K>::from_s_major(last);
    return primitive_part_s(g);
}

// Evaluation/interpolation route: gcd at enough rational t-samples, scaled by
// a known multiple of the leading coefficient, then interpolated and verified.
template <class K>
std::optional<BivarPoly<K>> gcd_pp_interp(const BivarPoly<K>& pa, const BivarPoly<K>& pb) {
    static_assert(RingTraits<K>::is_field);
    UniPoly<K> la = pa.lc_s(), lb = pb.lc_s();
    UniPoly<K> gamma = poly_gcd(la, lb);
    int bound = std::min(pa.deg_t(), pb.deg_t()) + std::max(gamma.degree(), 0) + 1;

    int dmin = -1;
    std::vector<K> xs;
    std::vector<UniPoly<K>> gs; // monic gcd at sample, scaled by gamma(sample)
    long k = 0;
    for (int tries = 0; (int)xs.size() < bound && tries < 8 * bound + 64; ++tries) {
        Rational pt(k);
        k = k > 0 ? -k : -k + 1; // 0, 1, -1, 2, -2, ...
        K tk = RingTraits<K>::from_rational(pt);
        if (RingTraits<K>::is_zero(la.eval(tk)) || RingTraits<K>::is_zero(lb.eval(tk))) continue;
        UniPoly<K> gk = poly_gcd(pa.eval_t(tk), pb.eval_t(tk));
        int d = gk.degree();
        if (d == 0) return BivarPoly<K>::constant(RingTraits<K>::one());
        if (dmin < 0 || d < dmin) {
            dmin = d;
            xs.clear();
            gs.clear();
        }
        if (d == dmin) {
            xs.push_back(tk);
            gs.push_back(gk * gamma.eval(tk));
        }
    }
    if ((int)xs.size() < bound) return std::nullopt;

    // interpolate each s-coefficient as a polynomial in t
    std::vector<UniPoly<K>> coeffs(dmin + 1);
    for (int j = 0; j <= dmin; ++j) {
        std::vector<K> ys;
        ys.reserve(xs.size());
        for (const auto& g : gs) ys.push_back(g.coeff(j));
        coeffs[j] = interpolate(xs, ys);
    }
    BivarPoly<K> ghat = BivarPoly<K>::from_s_major(UniPoly<UniPoly<K>>(std::move(coeffs)));
    BivarPoly<K> g = primitive_part_s(ghat);
    if (!divides_bivar(g, pa) || !divides_bivar(g, pb)) return std::nullopt;
    return g;
}

} // namespace detail_bivar

// Bivariate gcd over a field, normalized so the lex-leading coefficient is 1.
// Evaluation/interpolation with a subresultant-PRS fallback.
template <class K>
BivarPoly<K> gcd_bivar(const BivarPoly<K>& a, const BivarPoly<K>& b) {
    static_assert(RingTraits<K>::is_field);
    if (a.is_zero()) return b.is_zero() ? b : normalize_bivar(b);
    if (b.is_zero()) return normalize_bivar(a);
    if (a.deg_s() < 0 || b.deg_s() < 0) return BivarPoly<K>::constant(RingTraits<K>::one());

    UniPoly<K> ca, cb;
    BivarPoly<K> pa = primitive_part_s(a, &ca);
    BivarPoly<K> pb = primitive_part_s(b, &cb);
    UniPoly<K> cg = poly_gcd(ca, cb);

    BivarPoly<K> gpp;
    if (pa.deg_s() == 0 || pb.deg_s() == 0) {
        gpp = BivarPoly<K>::constant(RingTraits<K>::one());
    } else {
        auto gi = detail_bivar::gcd_pp_interp(pa, pb);
        gpp = gi ? *gi : detail_bivar::gcd_pp_prs(pa, pb);
    }
    BivarPoly<K> content_part = outer_product(cg, UniPoly<K>::constant(RingTraits<K>::one()));
    return normalize_bivar(gpp * content_part);
}

template <class K>
BivarPoly<K> bivar_cast(const BivarPoly<Rational>& p) {
    return p.template map_coeffs<K>(
        [](const Rational& v) { return RingTraits<K>::from_rational(v); });
}

template <class K>
std::string bivar_str(const BivarPoly<K>& p, const std::string& tv, const std::string& sv) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += coeff_str(it->second);
        if (it->first.first) out += "*" + tv + (it->first.first > 1 ? "^" + std::to_string(it->first.first) : "");
        if (it->first.second) out += "*" + sv + (it->first.second > 1 ? "^" + std::to_string(it->first.second) : "");
    }
    return out;
}

} // namespace curvesim
