#pragma once

#include "curvesim/segments.hpp"

#include <string>
#include <vector>

namespace curvesim {

struct PlanarUnsupported : std::runtime_error {
    PlanarUnsupported()
        : std::runtime_error("planar curve that is not a line or circle: the space-curve "
                             "similarity criterion assumes nonplanar inputs") {}
};

struct Options {
    enum class Strategy { Resultant, HPoly };
    Strategy strategy = Strategy::Resultant;
    bool enumerate_all = false; // disable |lambda|-uniqueness early termination
    int max_ext_degree = 2;     // cap on the s0 extension degree
    int precision = 12;         // decimal digits in approximations
    std::vector<Rational> t0_list; // preferred anchors for the helical route
};

// Exact scalar with display data: a rational, an algebraic number
// (defining polynomial + isolating interval), or an element of Q(lambda0)
// written as a polynomial in the generator L.
struct ScalarRepr {
    std::string kind; // "rational" | "algebraic" | "nf"
    std::string value;
    std::vector<std::string> poly;
    std::string lo, hi;
    std::string approx;
};

struct MoebiusRepr {
    std::array<ScalarRepr, 4> coeff; // a, b, c, d normalized
};

struct MatchRepr {
    ScalarRepr lambda;
    MoebiusRepr phi;
    std::array<std::array<ScalarRepr, 3>, 3> Q;
    std::array<ScalarRepr, 3> b;
    std::string field;   // coefficient field of phi, Q, b
    bool trivial = false; // identity similarity (self-comparison runs)
    std::string note;
};

struct CandidateRepr {
    ScalarRepr lambda;
    std::string source; // "S0" | "S1" | "S2" | "H"
    std::string status; // "verified" | "rejected" | "skipped"
    std::string reason;
};

struct SimilarityReport {
    bool similar = false;
    bool inconclusive = false;
    std::vector<MatchRepr> matches;
    int nontrivial_matches = 0;

    std::string class1, class2;
    bool helical_route = false;
    Rational helical_t0 = 0;
    std::string lambda_poly;     // squarefree candidate polynomial
    std::string lambda_poly_raw; // as accumulated / eliminated
    std::vector<CandidateRepr> candidates;
    std::vector<std::string> notes;
};

SimilarityReport similar3d(const RationalCurve3& x1, const RationalCurve3& x2,
                           const Options& opts = {});

// Self-comparison: all symmetries; the trivial identity is flagged and not
// counted in nontrivial_matches.
SimilarityReport symmetries(const RationalCurve3& x, const Options& opts = {});

std::vector<PolygonMatch> polygon_similarity(const ControlPolygon&, const ControlPolygon&);

// repr helpers shared with the CLI
ScalarRepr repr_rational(const Rational& v, int precision);
ScalarRepr repr_algebraic(const AlgebraicNumber& a, int precision);
ScalarRepr repr_nf(const NFQ& e, AlgebraicNumber alpha, int precision);

} // namespace curvesim
