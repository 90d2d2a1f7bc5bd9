#pragma once

// Zariski decompositions of A - tC inside the tracked lattice, both at a
// single rational t and as an exact piecewise-linear family in t.  P is kept
// nef against every tracked curve, N effective with negative-definite
// support Gram and P.D = 0 for each support curve D.

#include "deltacert/poly.hpp"
#include "deltacert/surface.hpp"

#include <vector>

namespace deltacert {

// A - tC left the pseudoeffective cone (t beyond the threshold).
class NotPseudoeffectiveError : public std::runtime_error {
public:
    explicit NotPseudoeffectiveError(const std::string& what) : std::runtime_error(what) {}
};

// Structural failures: support iteration not converging, inconsistent
// volume behavior, irrational thresholds outside the engine's scope.
class ZariskiError : public std::runtime_error {
public:
    explicit ZariskiError(const std::string& what) : std::runtime_error(what) {}
};

struct ZariskiDecomposition {
    DivisorClass p;
    DivisorClass n;
    std::vector<Eigen::Index> support; // curves with nonzero N coefficient
};

// One maximal interval [t_lo, t_hi] on which the support is constant and the
// P/N coefficients are affine in t.
struct ZariskiSegment {
    Rational t_lo;
    Rational t_hi;
    std::vector<Eigen::Index> support;
    std::vector<Poly> p_coeffs; // degree <= 1, one per tracked curve
    std::vector<Poly> n_coeffs; // degree <= 1, zero off the support
};

struct ZariskiFamily {
    Eigen::Index curve = -1;
    Rational tau; // pseudoeffective threshold of A - tC
    std::vector<ZariskiSegment> segments;

    // All segment endpoints, increasing, starting at 0 and ending at tau.
    std::vector<Rational> breakpoints() const;
    // Exact decomposition at t from the segment formulas.
    ZariskiDecomposition at(const Rational& t) const;
};

// Pointwise decomposition by support iteration: grow the support by curves P
// pairs negatively with, solve the support Gram system, drop coefficients
// that went negative, repeat.  Independent of decompose_family by design so
// the two can cross-check each other.
ZariskiDecomposition decompose_at(const LogDelPezzo& surface, Eigen::Index curve, const Rational& t);

// Event-driven construction of the whole family on [0, tau]: extend the
// current support's affine solution until a support curve's coefficient or a
// nef pairing hits zero, pivot, and stop when the volume vanishes.
ZariskiFamily decompose_family(const LogDelPezzo& surface, Eigen::Index curve);

// Largest t with A - tC pseudoeffective.
Rational pseff_threshold(const LogDelPezzo& surface, Eigen::Index curve);

} // namespace deltacert
