#pragma once

// Exact linear algebra over Rational: LU solves, singularity detection and
// negative-definiteness tests on Gram blocks.  Eigen does the pivoting; the
// scalar keeps everything exact.

#include "deltacert/rational.hpp"

#include <string>

namespace deltacert {

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// Solves M x = b exactly; throws SingularMatrixError when M is singular
// (message names the rank found so callers can report which Gram block
// degenerated).
RVector solve_linear(const RMatrix& m, const RVector& b);

// Sylvester test: all leading principal minors alternate starting negative.
// Accepts the empty matrix (vacuously negative definite).
bool is_negative_definite(const RMatrix& m);

} // namespace deltacert
