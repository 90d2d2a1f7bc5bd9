#include "deltacert/rational.hpp"

#include <Eigen/LU>

#include <doctest.h>

#include <sstream>

using deltacert::Rational;
using deltacert::RationalError;

TEST_CASE("construction canonicalizes sign and gcd") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(3, -2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(4, -6).numerator() == -2);
    CHECK(Rational(4, -6).denominator() == 3);
    CHECK_THROWS_AS(Rational(1, 0), RationalError);
}

TEST_CASE("parsing accepts p and p/q with signs, rejects junk") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse(""), RationalError);
    CHECK_THROWS_AS(Rational::parse("1/0"), RationalError);
    CHECK_THROWS_AS(Rational::parse("3.5"), RationalError);
    CHECK_THROWS_AS(Rational::parse("a/b"), RationalError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), RationalError);
    CHECK_THROWS_AS(Rational::parse(" 1/2"), RationalError);
    CHECK_THROWS_AS(Rational::parse("1/ 2"), RationalError);
}

TEST_CASE("field arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), RationalError);

    Rational s(0);
    for (int k = 1; k <= 10; ++k) s += Rational(1, k) - Rational(1, k + 1);
    CHECK(s == Rational(10, 11));
}

TEST_CASE("comparisons and helpers") {
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(5, 10) <= Rational(1, 2));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(abs(Rational(-3, 7)) == Rational(3, 7));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-5, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(deltacert::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
    CHECK(deltacert::max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
}

TEST_CASE("string forms") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(5).str_frac() == "5/1");
    CHECK(Rational(-7, 2).str_frac() == "-7/2");
    std::ostringstream os;
    os << Rational(22, 8);
    CHECK(os.str() == "11/4");
}

TEST_CASE("no overflow on large intermediate values") {
    // (2^40 / 3) * (3 / 2^40) == 1 exactly
    const Rational big(1099511627776L, 3);
    const Rational inv(3, 1099511627776L);
    CHECK(big * inv == Rational(1));
    Rational p(1);
    for (int k = 0; k < 20; ++k) p *= Rational(1009, 1013);
    Rational q(1);
    for (int k = 0; k < 20; ++k) q *= Rational(1013, 1009);
    CHECK(p * q == Rational(1));
}

TEST_CASE("Eigen matrices over Rational stay exact") {
    deltacert::RMatrix m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    m(1, 0) = Rational(1, 4);
    m(1, 1) = Rational(1, 5);
    CHECK(m.determinant() == Rational(1, 10) - Rational(1, 12));
    const deltacert::RMatrix mm = m * m;
    CHECK(mm(0, 0) == Rational(1, 4) + Rational(1, 12));
}
