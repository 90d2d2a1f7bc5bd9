#include "deltacert/linalg.hpp"

#include <Eigen/LU>

#include <sstream>

namespace deltacert {

RVector solve_linear(const RMatrix& m, const RVector& b) {
    if (m.rows() != m.cols())
        throw SingularMatrixError("solve_linear needs a square matrix");
    if (m.rows() != b.size())
        throw SingularMatrixError("solve_linear dimension mismatch between matrix and rhs");
    if (m.rows() == 0) return RVector(0);
    Eigen::FullPivLU<RMatrix> lu(m);
    if (!lu.isInvertible()) {
        std::ostringstream os;
        os << "singular system: rank " << lu.rank() << " of " << m.rows();
        throw SingularMatrixError(os.str());
    }
    return lu.solve(b);
}

bool is_negative_definite(const RMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const Eigen::Index k = m.rows();
    for (Eigen::Index j = 1; j <= k; ++j) {
        const Rational minor = RMatrix(m.topLeftCorner(j, j)).determinant();
        // (-1)^j * minor > 0 for negative definiteness.
        const int want = (j % 2 == 0) ? 1 : -1;
        if (minor.sign() != want) return false;
    }
    return true;
}

} // namespace deltacert
