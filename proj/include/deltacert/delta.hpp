#pragma once

// Stability thresholds from Zariski data: expected vanishing orders S(C),
// restricted flag invariants S(W_flag; p), log discrepancies at the marked
// points, and the resulting lower bounds on the local delta invariant.

#include "deltacert/poly.hpp"
#include "deltacert/surface.hpp"
#include "deltacert/zariski.hpp"

namespace deltacert {

// vol(A - tC) on [0, tau] as an exact piecewise quadratic, extended by zero
// beyond tau.
PiecewisePoly volume_function(const LogDelPezzo& surface, const ZariskiFamily& family);
PiecewisePoly volume_function(const LogDelPezzo& surface, Eigen::Index curve);

// S(C) = (1/A^2) * integral of vol(A - tC) over [0, tau].
Rational s_invariant(const LogDelPezzo& surface, const ZariskiFamily& family);
Rational s_invariant(const LogDelPezzo& surface, Eigen::Index curve);

// Same quantity read as the expected-multiplicity bound for a prime divisor
// (possibly living on a birational model whose surface is passed in).
Rational fujita_mult_bound(const LogDelPezzo& surface, const ZariskiFamily& family);

// Integrand of the flag invariant at p on C:
//   h(u) = (P(u).C) * ord_p(N(u)|_C) + (1/2) * (P(u).C)^2,
// with the local orders of the support curves read from p's negative_support
// (curves absent from the map do not pass through p).
PiecewisePoly h_function(const LogDelPezzo& surface, const ZariskiFamily& family, const PointOnCurve& p);

// S(W_flag; p) = (2/A^2) * integral of h over [0, tau].
Rational s_flag(const LogDelPezzo& surface, const ZariskiFamily& family, const PointOnCurve& p);

// A_{C,boundary}(p) = 1/r - boundary_local for the quotient point p.
Rational log_discrepancy(const LogDelPezzo& surface, const PointOnCurve& p);

struct FlagBound {
    Rational s_curve;
    Rational s_flag;
    Rational a_log;
    Rational bound; // min(1/S(C), a_log/S(W_flag; p))
};

// delta_p >= min(1/S(C), A(p)/S(W_flag; p)) for the flag (C, p).
FlagBound local_delta_bound(const LogDelPezzo& surface, const ZariskiFamily& family, const PointOnCurve& p);

} // namespace deltacert
