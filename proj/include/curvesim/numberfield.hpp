#pragma once

#include "curvesim/algebraic.hpp"
#include "curvesim/unipoly.hpp"

#include <exception>
#include <memory>

namespace curvesim {

// Thrown when an inversion (or an embedded zero test) meets a zero divisor in
// Q[x]/(modulus) with a reducible modulus. Carries the discovered monic factor
// so the caller can split the modulus and continue on the branch containing
// its root (dynamic evaluation).
template <class K>
struct ZeroDivisorSplit : std::exception {
    UniPoly<K> factor;
    UniPoly<K> modulus;
    ZeroDivisorSplit(UniPoly<K> f, UniPoly<K> m) : factor(std::move(f)), modulus(std::move(m)) {}
    const char* what() const noexcept override { return "zero divisor in number field"; }
};

template <class K>
struct NFContext {
    UniPoly<K> modulus; // monic, squarefree, degree >= 1
};

template <class K>
using NFCtxPtr = std::shared_ptr<const NFContext<K>>;

template <class K>
NFCtxPtr<K> make_nf_context(UniPoly<K> modulus) {
    assert(modulus.degree() >= 1);
    auto ctx = std::make_shared<NFContext<K>>();
    ctx->modulus = make_monic(modulus);
    return ctx;
}

// Element of K[x]/(modulus). A null context denotes a plain constant of K,
// promoted on contact with contextful elements; this keeps zero() and one()
// representable without a context.
template <class K>
class NFElem {
  public:
    NFElem() = default;
    NFElem(const K& constant) : rep_(UniPoly<K>::constant(constant)) {}
    NFElem(UniPoly<K> rep, NFCtxPtr<K> ctx) : rep_(std::move(rep)), ctx_(std::move(ctx)) {
        reduce();
    }

    static NFElem generator(NFCtxPtr<K> ctx) { return NFElem(UniPoly<K>::variable(), ctx); }

    bool is_zero() const { return rep_.is_zero(); }
    const UniPoly<K>& rep() const { return rep_; }
    const NFCtxPtr<K>& ctx() const { return ctx_; }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        return NFElem(a.rep_ + b.rep_, joined(a, b));
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) {
        return NFElem(a.rep_ - b.rep_, joined(a, b));
    }
    NFElem operator-() const { return NFElem(-rep_, ctx_); }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        return NFElem(a.rep_ * b.rep_, joined(a, b));
    }
    friend NFElem operator*(const NFElem& a, const Rational& r) {
        return NFElem(a.rep_ * RingTraits<K>::from_rational(r), a.ctx_);
    }
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * inverse(b); }

    friend bool operator==(const NFElem& a, const NFElem& b) { return (a - b).is_zero(); }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    // Multiplicative inverse modulo the modulus via the extended Euclidean
    // algorithm; throws ZeroDivisorSplit when gcd(rep, modulus) is proper.
    friend NFElem inverse(const NFElem& e) {
        assert(!e.is_zero());
        if (!e.ctx_) {
            assert(e.rep_.degree() == 0);
            K c = e.rep_.coeff(0);
            return NFElem(UniPoly<K>::constant(RingTraits<K>::divexact(RingTraits<K>::one(), c)),
                          nullptr);
        }
        const UniPoly<K>& m = e.ctx_->modulus;
        UniPoly<K> a = m, b = e.rep_;
        UniPoly<K> ua = UniPoly<K>::zero(), ub = UniPoly<K>::constant(RingTraits<K>::one());
        while (!b.is_zero() && b.degree() > 0) {
            auto [q, r] = divrem_field(a, b);
            UniPoly<K> un = ua - q * ub;
            a = b;
            b = r;
            ua = ub;
            ub = un;
        }
        if (b.is_zero()) // proper gcd discovered: modulus splits
            throw ZeroDivisorSplit<K>(make_monic(a), m);
        K c = b.coeff(0);
        UniPoly<K> inv = ub.template map_coeffs<K>(
            [&](const K& v) { return RingTraits<K>::divexact(v, c); });
        return NFElem(std::move(inv), e.ctx_);
    }

  private:
    static NFCtxPtr<K> joined(const NFElem& a, const NFElem& b) {
        if (a.ctx_ && b.ctx_) {
            assert(a.ctx_ == b.ctx_ || a.ctx_->modulus == b.ctx_->modulus);
            return a.ctx_;
        }
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }
    void reduce() {
        if (ctx_ && !rep_.is_zero() && rep_.degree() >= ctx_->modulus.degree())
            rep_ = divrem_field(rep_, ctx_->modulus).second;
    }
    UniPoly<K> rep_;
    NFCtxPtr<K> ctx_;
};

template <class K>
struct RingTraits<NFElem<K>> {
    static constexpr bool is_field = true;
    static NFElem<K> zero() { return NFElem<K>(); }
    static NFElem<K> one() { return NFElem<K>(RingTraits<K>::one()); }
    static bool is_zero(const NFElem<K>& a) { return a.is_zero(); }
    static NFElem<K> divexact(const NFElem<K>& a, const NFElem<K>& b) { return a / b; }
    static NFElem<K> gcd(const NFElem<K>&, const NFElem<K>&) { return one(); }
    static NFElem<K> from_rational(const Rational& r) {
        return NFElem<K>(RingTraits<K>::from_rational(r));
    }
};

template <class K>
std::optional<NFElem<K>> ring_try_divexact(const NFElem<K>& a, const NFElem<K>& b) {
    return a / b;
}

using NFQ = NFElem<Rational>; // elements of Q(lambda0)

// Exact sign of e under the real embedding sending the generator to alpha.
// A ring-nonzero element that vanishes at alpha is a zero divisor: the split
// is surfaced so the caller can refine the branch.
inline int sign_embedded(const NFQ& e, AlgebraicNumber& alpha) {
    if (e.is_zero()) return 0;
    if (!e.ctx()) return deep_sign(e.rep());
    AlgebraicNumber probe = alpha;
    int s = sign_at(e.rep(), probe);
    if (s == 0) {
        UniPoly<Rational> g = poly_gcd(e.rep(), e.ctx()->modulus);
        throw ZeroDivisorSplit<Rational>(make_monic(g), e.ctx()->modulus);
    }
    alpha = probe; // keep the refinement
    return s;
}

// Embedded zero test with the same split semantics.
inline bool is_zero_embedded(const NFQ& e, AlgebraicNumber& alpha) {
    if (e.is_zero()) return true;
    return sign_embedded(e, alpha) == 0;
}

// Rational enclosure of e's image; refines alpha until the width target.
inline std::pair<Rational, Rational> enclose_embedded(const NFQ& e, AlgebraicNumber& alpha,
                                                      const Rational& width) {
    if (!e.ctx() || e.rep().degree() <= 0) {
        Rational v = e.rep().is_zero() ? Rational(0) : e.rep().coeff(0);
        return {v, v};
    }
    while (true) {
        if (alpha.is_rational_val()) {
            Rational v = e.rep().eval(alpha.lo);
            return {v, v};
        }
        // interval Horner
        Rational lo = 0, hi = 0;
        for (int i = e.rep().degree(); i >= 0; --i) {
            Rational c = e.rep().coeff(i);
            Rational p1 = lo * alpha.lo, p2 = lo * alpha.hi, p3 = hi * alpha.lo, p4 = hi * alpha.hi;
            Rational nlo = std::min(std::min(p1, p2), std::min(p3, p4));
            Rational nhi = std::max(std::max(p1, p2), std::max(p3, p4));
            lo = nlo + c;
            hi = nhi + c;
        }
        if (hi - lo < width) return {lo, hi};
        refine_step(alpha);
    }
}

template <class K>
std::string nf_str(const NFElem<K>& e, const std::string& gen) {
    return poly_str(e.rep(), gen);
}

template <class K>
std::string coeff_str(const NFElem<K>& e) {
    return "(" + poly_str(e.rep(), "L") + ")";
}

} // namespace curvesim
