#pragma once

// Test-only brute-force oracles, kept independent of the library's
// computation paths on purpose.

#include "curvesim/bivar.hpp"
#include "curvesim/unipoly.hpp"

#include <random>
#include <vector>

namespace curvesim::oracles {

// Determinant by cofactor expansion; fine for the small Sylvester matrices
// the oracle tests use.
template <class K>
K det_cofactor(std::vector<std::vector<K>> m) {
    size_t n = m.size();
    if (n == 0) return RingTraits<K>::one();
    if (n == 1) return m[0][0];
    K acc = RingTraits<K>::zero();
    for (size_t j = 0; j < n; ++j) {
        if (RingTraits<K>::is_zero(m[0][j])) continue;
        std::vector<std::vector<K>> sub(n - 1, std::vector<K>(n - 1, RingTraits<K>::zero()));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        K term = m[0][j] * det_cofactor(sub);
        if (j % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

// Resultant as the determinant of the Sylvester matrix.
template <class K>
K sylvester_resultant(const UniPoly<K>& p, const UniPoly<K>& q) {
    int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) return RingTraits<K>::zero();
    if (m == 0 && n == 0) return RingTraits<K>::one();
    size_t dim = m + n;
    std::vector<std::vector<K>> s(dim, std::vector<K>(dim, RingTraits<K>::zero()));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = p.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = q.coeff(n - i);
    return det_cofactor(s);
}

// Count distinct real roots by sign sweeps on a dense rational grid plus
// endpoint checks; assumes all roots lie in (-bound, bound) and are separated
// by more than the grid step. Used only on controlled random inputs.
inline int count_roots_grid(const UniPoly<Rational>& p, long bound, long denom) {
    int count = 0;
    int prev = 0;
    for (long k = -bound * denom; k <= bound * denom; ++k) {
        Rational x(k, denom);
        int s = sgn(p.eval(x));
        if (s == 0) {
            ++count;
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline UniPoly<Rational> random_poly(std::mt19937_64& rng, int deg, int coeff_range) {
    std::uniform_int_distribution<int> d(-coeff_range, coeff_range);
    std::vector<Rational> c(deg + 1);
    for (int i = 0; i <= deg; ++i) c[i] = d(rng);
    if (sgn(c[deg]) == 0) c[deg] = 1;
    return UniPoly<Rational>(std::move(c));
}

inline BivarPoly<Rational> random_bivar(std::mt19937_64& rng, int dt, int ds, int coeff_range) {
    std::uniform_int_distribution<int> d(-coeff_range, coeff_range);
    BivarPoly<Rational> p;
    for (int i = 0; i <= dt; ++i)
        for (int j = 0; j <= ds; ++j) p.add_term(i, j, Rational(d(rng)));
    if (p.is_zero()) p.add_term(dt, ds, 1);
    return p;
}

} // namespace curvesim::oracles
