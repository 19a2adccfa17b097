#include "curvesim/algebraic.hpp"

#include <cassert>

namespace curvesim {

int sign_eval_rational(const UniPoly<Integer>& p, const Integer& num, const Integer& den) {
    // sign of p(num/den) = sign of sum a_i num^i den^(n-i)
    if (p.is_zero()) return 0;
    int n = p.degree();
    Integer acc = 0, npow = 1;
    std::vector<Integer> dpow(n + 1);
    dpow[n] = 1;
    for (int i = n - 1; i >= 0; --i) dpow[i] = dpow[i + 1] * den;
    for (int i = 0; i <= n; ++i) {
        acc += p.coeff(i) * npow * dpow[i];
        npow *= num;
    }
    return sgn(acc);
}

static int sign_eval(const UniPoly<Integer>& p, const Rational& x) {
    return sign_eval_rational(p, Integer(x.get_num()), Integer(x.get_den()));
}

void refine_step(AlgebraicNumber& a) {
    if (a.is_rational_val()) return;
    UniPoly<Integer> zp = primitive_integer_associate(a.defining);
    Rational mid = (a.lo + a.hi) / 2;
    int sm = sign_eval(zp, mid);
    if (sm == 0) {
        // the unique root in the interval turned out to be the midpoint
        a.defining = UniPoly<Rational>(std::vector<Rational>{-mid, 1});
        a.lo = a.hi = mid;
        return;
    }
    int slo = sign_eval(zp, a.lo);
    assert(slo != 0);
    if (slo != sm)
        a.hi = mid;
    else
        a.lo = mid;
}

void refine_to_width(AlgebraicNumber& a, const Rational& width) {
    while (!a.is_rational_val() && a.hi - a.lo >= width) refine_step(a);
}

int sign_of(AlgebraicNumber& a) {
    if (a.is_rational_val()) return sgn(a.lo);
    while (true) {
        if (sgn(a.lo) >= 0) return 1;  // root lies in (lo, hi)
        if (sgn(a.hi) <= 0) return -1;
        refine_step(a);
        if (a.is_rational_val()) return sgn(a.lo);
    }
}

AlgebraicNumber negate(const AlgebraicNumber& a) {
    AlgebraicNumber r;
    std::vector<Rational> c = a.defining.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (i % 2 == 1) c[i] = -c[i];
    r.defining = make_monic(UniPoly<Rational>(std::move(c)));
    r.lo = -a.hi;
    r.hi = -a.lo;
    return r;
}

int sign_at(const UniPoly<Rational>& u, AlgebraicNumber& a) {
    if (u.is_zero()) return 0;
    if (a.is_rational_val()) return sgn(u.eval(a.lo));
    UniPoly<Rational> g = poly_gcd(u, a.defining);
    if (g.degree() >= 1) {
        // endpoints are non-roots of the defining polynomial, hence of g;
        // a sign change of g over the interval means u(a) = 0 exactly
        UniPoly<Integer> zg = primitive_integer_associate(g);
        while (true) {
            int slo = sign_eval(zg, a.lo), shi = sign_eval(zg, a.hi);
            if (slo != 0 && shi != 0) {
                if (slo != shi) return 0;
                break;
            }
            refine_step(a);
            if (a.is_rational_val()) return sgn(u.eval(a.lo));
        }
    }
    // u(a) != 0: refine until the interval is certified free of roots of u
    UniPoly<Integer> zu = primitive_integer_associate(u);
    auto sturm = sturm_sequence(u);
    auto inside = [&](const Rational& x) {
        return detail::sturm_variations(
            sturm, [&](const UniPoly<Rational>& f) { return sgn(f.eval(x)); });
    };
    while (true) {
        int slo = sign_eval(zu, a.lo), shi = sign_eval(zu, a.hi);
        if (slo != 0 && slo == shi && inside(a.lo) == inside(a.hi)) return slo;
        refine_step(a);
        if (a.is_rational_val()) return sgn(u.eval(a.lo));
    }
}

void restrict_defining(AlgebraicNumber& a, const UniPoly<Rational>& g0) {
    if (a.is_rational_val()) return;
    UniPoly<Rational> g = make_monic(g0);
    if (g.degree() < 1 || g.degree() >= a.defining.degree()) return;
    auto rest = try_divexact(a.defining, g);
    if (!rest) return;
    UniPoly<Integer> zg = primitive_integer_associate(g);
    int slo = sign_eval(zg, a.lo), shi = sign_eval(zg, a.hi);
    // defining is squarefree, so exactly one of g, defining/g owns the root
    a.defining = (slo != 0 && shi != 0 && slo != shi) ? g : make_monic(*rest);
    if (a.defining.degree() == 1) {
        Rational r = -a.defining.coeff(0);
        a.lo = a.hi = r;
    }
}

bool equal(AlgebraicNumber a, AlgebraicNumber b) { return compare(std::move(a), std::move(b)) == 0; }

int compare(AlgebraicNumber a, AlgebraicNumber b) {
    if (a.is_rational_val() && b.is_rational_val())
        return a.lo < b.lo ? -1 : (a.lo == b.lo ? 0 : 1);
    for (int round = 0;; ++round) {
        if (a.hi < b.lo) return -1;
        if (b.hi < a.lo) return 1;
        if (a.is_rational_val()) {
            int s = sign_at(a.defining, b); // sign of (b - a_value)
            return s == 0 ? 0 : (s > 0 ? -1 : 1);
        }
        if (b.is_rational_val()) {
            int s = sign_at(b.defining, a); // sign of (a - b_value)
            return s;
        }
        if (round == 3) {
            UniPoly<Rational> g = poly_gcd(a.defining, b.defining);
            if (g.degree() >= 1 && sign_at(g, a) == 0 && sign_at(g, b) == 0) {
                // both are roots of g; equal iff the isolating intervals pin
                // the same root of g
                AlgebraicNumber ag = a, bg = b;
                ag.defining = make_monic(g);
                bg.defining = ag.defining;
                while (true) {
                    if (ag.hi < bg.lo) return -1;
                    if (bg.hi < ag.lo) return 1;
                    if ((bg.lo >= ag.lo && bg.hi <= ag.hi) || (ag.lo >= bg.lo && ag.hi <= bg.hi))
                        return 0;
                    refine_step(ag);
                    refine_step(bg);
                    if (ag.is_rational_val() && bg.is_rational_val())
                        return ag.lo < bg.lo ? -1 : (ag.lo == bg.lo ? 0 : 1);
                }
            }
        }
        refine_step(a);
        refine_step(b);
    }
}

std::string decimal(AlgebraicNumber a, int digits) {
    Rational w = Rational(1, int_pow(10, digits + 1));
    refine_to_width(a, w);
    Rational mid = a.is_rational_val() ? a.lo : (a.lo + a.hi) / 2;
    return rat_decimal(mid, digits);
}

// ---------------------------------------------------------------------------
// Root isolation (Descartes / Vincent-Collins-Akritas bisection)

namespace {

int sign_variations(const UniPoly<Integer>& p) {
    int var = 0, prev = 0;
    for (const auto& c : p.coeffs()) {
        int s = sgn(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// number of roots of q in (0,1), bounded via var((x+1)^n q(1/(x+1)))
int descartes_01(const UniPoly<Integer>& q) {
    UniPoly<Integer> t = taylor_shift(q.reversed(), Integer(1));
    return sign_variations(t);
}

// 2^n q(x/2)
UniPoly<Integer> half_scale(const UniPoly<Integer>& q) {
    int n = q.degree();
    std::vector<Integer> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = q.coeff(i) * int_pow(2, n - i);
    return UniPoly<Integer>(std::move(c));
}

struct Isolator {
    UniPoly<Integer> side; // the polynomial whose roots are isolated, side coords
    std::vector<std::pair<Rational, Rational>> intervals; // strict isolating intervals
    std::vector<Rational> exact;

    // roots of q in (0,1) correspond to roots of `side` in (lo,hi); exact
    // roots found at bisection points are divided out of q, so they can sit
    // on a descendant's boundary. An interval is only emitted once neither
    // endpoint is a root of `side`, otherwise we keep splitting.
    void isolate01(UniPoly<Integer> q, const Rational& lo, const Rational& hi) {
        int v = descartes_01(q);
        if (v == 0) return;
        if (v == 1 && sign_eval(side, lo) != 0 && sign_eval(side, hi) != 0) {
            intervals.emplace_back(lo, hi);
            return;
        }
        Rational mid = (lo + hi) / 2;
        if (sign_eval(q, Rational(1, 2)) == 0) {
            exact.push_back(mid);
            q = divexact_poly(q, UniPoly<Integer>(std::vector<Integer>{-1, 2})); // (2x - 1)
        }
        UniPoly<Integer> left = half_scale(q);
        UniPoly<Integer> right = taylor_shift(left, Integer(1));
        isolate01(left, lo, mid);
        isolate01(right, mid, hi);
    }
};

// The unique integer in [lo*L, hi*L] if the scaled interval is short enough
// to contain at most one; nullopt when empty.
std::optional<Integer> integer_in_scaled_interval(const Rational& lo, const Rational& hi,
                                                  const Integer& L) {
    Rational a = lo * Rational(L), b = hi * Rational(L);
    Integer ka, kb;
    mpz_cdiv_q(ka.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(kb.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    if (ka > kb) return std::nullopt;
    return ka;
}

// Simplest rational strictly inside (lo, hi) by continued-fraction descent;
// quick probe for rational roots before the complete denominator-bound pass.
std::optional<Rational> simplest_rational_between(const Rational& lo, const Rational& hi,
                                                  int depth = 512) {
    if (depth <= 0 || lo >= hi) return std::nullopt;
    if (sgn(lo) < 0 && sgn(hi) > 0) return Rational(0);
    if (sgn(hi) <= 0) {
        auto r = simplest_rational_between(-hi, -lo, depth);
        if (!r) return std::nullopt;
        return -*r;
    }
    // 0 <= lo < hi
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    Rational frac = lo - Rational(fl);
    Rational ceil_lo = sgn(frac) == 0 ? lo + 1 : Rational(fl) + 1;
    if (ceil_lo < hi) return ceil_lo;
    // no integer strictly inside: (lo, hi) within (fl, fl + 1]
    if (sgn(frac) == 0) {
        // lo = fl exactly: interval (fl, hi), mirror through reciprocal
        Rational inv = 1 / (hi - Rational(fl));
        Integer f2;
        mpz_fdiv_q(f2.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        return Rational(fl) + Rational(1) / (Rational(f2) + 1);
    }
    auto sub = simplest_rational_between(1 / (hi - Rational(fl)), 1 / frac, depth - 1);
    if (!sub) return std::nullopt;
    return Rational(fl) + 1 / *sub;
}

// Complete rational-root detection inside an isolating interval: a rational
// root u/v in lowest terms of a primitive integer polynomial has v | lc, so
// it equals k/|lc| for an integer k.
bool detect_rational_in_interval(const UniPoly<Integer>& zp, AlgebraicNumber& a) {
    Integer L = abs(zp.lc());
    int probe_countdown = 0;
    while (true) {
        if (a.is_rational_val()) return true;
        if (probe_countdown-- <= 0) {
            probe_countdown = 8;
            auto r = simplest_rational_between(a.lo, a.hi);
            if (r && sign_eval(zp, *r) == 0) {
                a.defining = UniPoly<Rational>(std::vector<Rational>{-*r, 1});
                a.lo = a.hi = *r;
                return true;
            }
        }
        if ((a.hi - a.lo) * Rational(L) < 1) break;
        refine_step(a);
    }
    if (a.is_rational_val()) return true;
    auto k = integer_in_scaled_interval(a.lo, a.hi, L);
    if (!k) return false;
    Rational cand = make_ratio(*k, L);
    if (cand > a.lo && cand < a.hi && sign_eval(zp, cand) == 0) {
        a.defining = UniPoly<Rational>(std::vector<Rational>{-cand, 1});
        a.lo = a.hi = cand;
        return true;
    }
    return false;
}

} // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly<Rational>& p) {
    assert(!p.is_zero());
    std::vector<AlgebraicNumber> out;
    if (p.degree() == 0) return out;
    UniPoly<Integer> zp = primitive_integer_associate(p);

    if (sgn(zp.coeff(0)) == 0) {
        out.push_back(AlgebraicNumber::from_rational(0));
        zp = divexact_poly(zp, UniPoly<Integer>(std::vector<Integer>{0, 1}));
    }
    if (zp.degree() == 1) {
        out.push_back(AlgebraicNumber::from_rational(make_ratio(-zp.coeff(0), zp.coeff(1))));
    } else if (zp.degree() >= 2) {
        Integer maxc = 0;
        for (const auto& c : zp.coeffs()) {
            Integer v = abs(c);
            if (v > maxc) maxc = v;
        }
        Integer lc = abs(zp.lc());
        Integer B = 1;
        while (B * lc < maxc + lc) B *= 2; // B >= 1 + max|a_i|/|a_n|

        UniPoly<Rational> defining = make_monic(to_rational_poly(zp));
        auto run_side = [&](bool positive) {
            UniPoly<Integer> side = zp;
            if (!positive) {
                std::vector<Integer> c = side.coeffs();
                for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
                side = UniPoly<Integer>(std::move(c));
            }
            int n = side.degree();
            std::vector<Integer> qc(n + 1);
            Integer Bp = 1;
            for (int i = 0; i <= n; ++i) {
                qc[i] = side.coeff(i) * Bp;
                Bp *= B;
            }
            Isolator iso;
            iso.side = side;
            iso.isolate01(UniPoly<Integer>(std::move(qc)), Rational(0), Rational(B));
            for (const auto& r : iso.exact)
                out.push_back(AlgebraicNumber::from_rational(positive ? r : -r));
            for (const auto& [lo, hi] : iso.intervals) {
                AlgebraicNumber a;
                a.defining = defining;
                a.lo = positive ? lo : -hi;
                a.hi = positive ? hi : -lo;
                detect_rational_in_interval(zp, a);
                out.push_back(std::move(a));
            }
        };
        run_side(true);
        run_side(false);
    }
    std::sort(out.begin(), out.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
    return out;
}

bool recognize_pure_quadratic(AlgebraicNumber& a) {
    if (a.is_rational_val() || a.defining.degree() <= 2) return false;
    UniPoly<Integer> zp = primitive_integer_associate(a.defining);
    Integer L = abs(zp.lc());
    size_t budget = mpz_sizeinbase(L.get_mpz_t(), 2) + 128;
    for (size_t i = 0; i < budget; ++i) {
        Rational l2 = a.lo * a.lo, h2 = a.hi * a.hi;
        Rational slo = l2 < h2 ? l2 : h2, shi = l2 < h2 ? h2 : l2;
        if (sgn(a.lo) < 0 && sgn(a.hi) > 0) slo = 0;
        if ((shi - slo) * Rational(L) < 1) {
            auto k = integer_in_scaled_interval(slo, shi, L);
            if (!k) return false;
            Rational r = make_ratio(*k, L);
            if (sgn(r) <= 0) return false;
            UniPoly<Rational> quad(std::vector<Rational>{-r, 0, 1});
            UniPoly<Rational> g = poly_gcd(quad, a.defining);
            if (g.degree() == 2) {
                UniPoly<Integer> zg = primitive_integer_associate(g);
                int sl = sign_eval(zg, a.lo), sh = sign_eval(zg, a.hi);
                if (sl != 0 && sh != 0 && sl != sh) {
                    a.defining = make_monic(g);
                    return true;
                }
            }
            return false;
        }
        refine_step(a);
        if (a.is_rational_val()) return false;
    }
    return false;
}

int count_real_roots(const UniPoly<Rational>& p, const std::optional<Rational>& a,
                     const std::optional<Rational>& b) {
    return sturm_count(p, a, b);
}

} // namespace curvesim
