#include "deltacert/linalg.hpp"

#include <Eigen/LU>

#include <doctest.h>

using deltacert::Rational;
using deltacert::RMatrix;
using deltacert::RVector;
using deltacert::SingularMatrixError;

namespace {
RMatrix mat2(Rational a, Rational b, Rational c, Rational d) {
    RMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}
} // namespace

TEST_CASE("exact solve of a well-conditioned system") {
    const RMatrix m = mat2(Rational(2), Rational(1), Rational(1), Rational(3));
    RVector b(2);
    b << Rational(1), Rational(2);
    const RVector x = deltacert::solve_linear(m, b);
    CHECK(x(0) == Rational(1, 5));
    CHECK(x(1) == Rational(3, 5));
    CHECK((m * x - b).isZero());
}

TEST_CASE("exact solve with fractional entries") {
    const RMatrix m =
        mat2(Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5));
    RVector b(2);
    b << Rational(1), Rational(0);
    const RVector x = deltacert::solve_linear(m, b);
    // det = 1/10 - 1/12 = 1/60; x = 60 * (1/5, -1/4)
    CHECK(x(0) == Rational(12));
    CHECK(x(1) == Rational(-15));
}

TEST_CASE("singular systems are reported, not approximated") {
    const RMatrix m = mat2(Rational(1), Rational(2), Rational(2), Rational(4));
    RVector b(2);
    b << Rational(1), Rational(1);
    CHECK_THROWS_AS(deltacert::solve_linear(m, b), SingularMatrixError);

    // Nearly-singular in floating point, fine exactly.
    const RMatrix tight = mat2(Rational(1), Rational(1),
                               Rational(1), Rational(1) + Rational(1, 1000000000000L));
    RVector rhs(2);
    rhs << Rational(0), Rational(1);
    const RVector x = deltacert::solve_linear(tight, rhs);
    CHECK(x(1) == Rational(1000000000000L));
}

TEST_CASE("dimension mismatches are rejected") {
    RMatrix m(2, 3);
    m.setConstant(Rational(1));
    RVector b(2);
    b.setConstant(Rational(1));
    CHECK_THROWS_AS(deltacert::solve_linear(m, b), SingularMatrixError);
    RMatrix sq(2, 2);
    sq.setConstant(Rational(1));
    RVector b3(3);
    b3.setConstant(Rational(1));
    CHECK_THROWS_AS(deltacert::solve_linear(sq, b3), SingularMatrixError);
}

TEST_CASE("empty system has the empty solution") {
    const RVector x = deltacert::solve_linear(RMatrix(0, 0), RVector(0));
    CHECK(x.size() == 0);
}

TEST_CASE("negative definiteness via alternating principal minors") {
    CHECK(deltacert::is_negative_definite(mat2(Rational(-2), Rational(1),
                                                Rational(1), Rational(-2))));
    // Symmetric, leading entry negative, but det < 0: indefinite.
    CHECK_FALSE(deltacert::is_negative_definite(mat2(Rational(-1), Rational(-2),
                                                      Rational(-2), Rational(-1))));
    CHECK_FALSE(deltacert::is_negative_definite(mat2(Rational(1), Rational(0),
                                                      Rational(0), Rational(1))));
    // Negative semidefinite only (det = 0) must fail the strict test.
    CHECK_FALSE(deltacert::is_negative_definite(mat2(Rational(-1), Rational(1),
                                                      Rational(1), Rational(-1))));
    RMatrix one(1, 1);
    one(0, 0) = Rational(-1, 7);
    CHECK(deltacert::is_negative_definite(one));
    one(0, 0) = Rational(0);
    CHECK_FALSE(deltacert::is_negative_definite(one));
    CHECK(deltacert::is_negative_definite(RMatrix(0, 0)));
    CHECK_FALSE(deltacert::is_negative_definite(RMatrix(2, 3)));
}

TEST_CASE("definiteness of curve-configuration Gram blocks") {
    // Pairs of negative curves that appear as supports are negative definite...
    RMatrix pair(2, 2);
    pair << Rational(-5, 18), Rational(2, 9), Rational(2, 9), Rational(-5, 18);
    CHECK(deltacert::is_negative_definite(pair));

    // ...but the full triple of mutually meeting curves is not (its
    // determinant is +1/144), so it can never be contracted at once.
    RMatrix g(3, 3);
    g << Rational(-7, 36), Rational(1, 9), Rational(1, 9),
        Rational(1, 9), Rational(-5, 18), Rational(2, 9),
        Rational(1, 9), Rational(2, 9), Rational(-5, 18);
    CHECK(g.determinant() == Rational(1, 144));
    CHECK_FALSE(deltacert::is_negative_definite(g));
}
