#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace curvesim {

// Exact arbitrary-precision rational. mpq_class keeps the canonical form
// (coprime numerator/denominator, denominator > 0) on every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

// Canonicalized quotient of two integers (mpq_class(n, d) alone does not
// reduce or fix the denominator sign).
inline Rational make_ratio(const Integer& n, const Integer& d) {
    Rational q(n, d);
    mpq_canonicalize(q.get_mpq_t());
    return q;
}

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

inline Rational rat_abs(const Rational& q) { return abs(q); }

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    Rational b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact square root of a rational if it is a perfect square.
inline std::optional<Rational> rat_sqrt_exact(const Rational& q) {
    if (sign(q) < 0) return std::nullopt;
    Integer n = q.get_num(), d = q.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        Integer rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(rn, rd);
    }
    return std::nullopt;
}

// Parses "p", "-p/q" or decimal-free integer strings. Throws on malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + s);
    mpq_canonicalize(q.get_mpq_t());
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Bit size of max(|num|, den); the paper's coefficient-size measure.
inline size_t rat_bitsize(const Rational& q) {
    size_t n = mpz_sizeinbase(q.get_num_mpz_t(), 2);
    size_t d = mpz_sizeinbase(q.get_den_mpz_t(), 2);
    return n > d ? n : d;
}

// Decimal approximation with the given number of fractional digits, for
// display next to exact certificates.
inline std::string rat_decimal(const Rational& q, int digits) {
    Integer scale = int_pow(10, digits);
    Integer n = q.get_num() * scale;
    Integer d = q.get_den();
    Integer quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    // round half away from zero
    Integer twice = 2 * abs(rem);
    if (twice >= d) quot += (sign(n) < 0 || (sign(n) == 0 && sign(q) < 0) ? -1 : 1);
    bool neg = sign(quot) < 0;
    std::string digitsStr = Integer(abs(quot)).get_str();
    if ((int)digitsStr.size() <= digits)
        digitsStr.insert(0, digits + 1 - digitsStr.size(), '0');
    digitsStr.insert(digitsStr.size() - digits, ".");
    return (neg ? "-" : "") + digitsStr;
}

} // namespace curvesim
