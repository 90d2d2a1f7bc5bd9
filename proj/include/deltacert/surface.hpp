#pragma once

// Numerical model of a log del Pezzo pair: a finite lattice of tracked curve
// classes with its exact Gram matrix, a boundary divisor, the polarization
// -(K + boundary), and marked points carrying the local data (quotient
// singularity type, boundary multiplicity, local orders of the other tracked
// curves) that the flag computations consume.

#include "deltacert/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace deltacert {

class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

struct CurveClass {
    std::string name;
};

// Cyclic quotient singularity 1/r(a,b); r = 1 means a smooth point.
struct QuotientSingularity {
    long r = 1;
    long a = 1;
    long b = 1;
};

// A marked point on one tracked curve ("host").  boundary_local is the local
// intersection multiplicity of the boundary divisor with the host at the
// point; negative_support maps other tracked curves to their local order
// along the host at the point (curves absent from the map miss the point).
struct PointOnCurve {
    std::string name;
    std::string host;
    QuotientSingularity sing;
    Rational boundary_local;
    std::map<std::string, Rational> negative_support;
};

// Divisor classes are coefficient vectors over the tracked curve basis.
using DivisorClass = RVector;

struct IntersectionLattice {
    std::vector<CurveClass> curves;
    RMatrix gram;

    Eigen::Index size() const { return static_cast<Eigen::Index>(curves.size()); }
    // Index of a curve by name, -1 when absent.
    Eigen::Index index_of(std::string_view name) const;
    DivisorClass basis_vector(Eigen::Index i) const;
};

struct LogDelPezzo {
    std::string name;
    IntersectionLattice lattice;
    DivisorClass boundary;
    DivisorClass polarization;
    std::vector<PointOnCurve> points;

    Eigen::Index curve_index(std::string_view curve_name) const;
    const PointOnCurve* find_point(std::string_view host, std::string_view point_name) const;
};

// Exact intersection pairing a . b in the tracked lattice.
Rational intersect(const IntersectionLattice& lattice, const DivisorClass& a, const DivisorClass& b);

// Structural checks: unique nonempty curve names, symmetric Gram of the right
// size, boundary coefficients in [0,1), polarization nef against the tracked
// curves with positive self-intersection, point hosts that exist, singularity
// weights coprime to r, and negative_support entries naming tracked curves
// with nonnegative orders.  Returns human-readable problems; empty means ok.
std::vector<std::string> validate(const LogDelPezzo& surface);

// validate(), throwing a ModelError that lists every problem found.
void require_valid(const LogDelPezzo& surface);

} // namespace deltacert
