#include "deltacert/link_topology.hpp"

#include <doctest.h>

using namespace deltacert;

TEST_CASE("monodromy divisor of classical cones") {
    SUBCASE("cubic cone") {
        const auto d = monodromy_divisor({1, 1, 1, 1}, 3);
        CHECK(d.milnor_number == 16);
        CHECK(eigenvalue_one_multiplicity(d) == 6);
    }
    SUBCASE("quadric cone") {
        const auto d = monodromy_divisor({1, 1, 1, 1}, 2);
        CHECK(d.milnor_number == 1);
        CHECK(eigenvalue_one_multiplicity(d) == 1);
    }
    SUBCASE("quartic cone") {
        const auto d = monodromy_divisor({1, 1, 1, 1}, 4);
        CHECK(d.milnor_number == 81);
        CHECK(eigenvalue_one_multiplicity(d) == 21);
    }
}

TEST_CASE("eigenvalue count agrees with direct root counting on diagonal forms") {
    // For x0^d + x1^d + x2^d + x3^d the monodromy eigenvalues are products
    // zeta^(a0+a1+a2+a3) over 1 <= ai <= d-1; eigenvalue 1 appears once per
    // solution of a0+a1+a2+a3 = 0 mod d.
    for (long d : {2L, 3L, 4L, 5L, 6L, 7L}) {
        long direct = 0;
        for (long a0 = 1; a0 < d; ++a0)
            for (long a1 = 1; a1 < d; ++a1)
                for (long a2 = 1; a2 < d; ++a2)
                    for (long a3 = 1; a3 < d; ++a3)
                        if ((a0 + a1 + a2 + a3) % d == 0) ++direct;
        const auto div = monodromy_divisor({1, 1, 1, 1}, d);
        CHECK(eigenvalue_one_multiplicity(div) == direct);
        CHECK(div.milnor_number == (d - 1) * (d - 1) * (d - 1) * (d - 1));
    }
}

TEST_CASE("divisor of the n = 2 member") {
    const auto d = monodromy_divisor({2, 4, 8, 9}, 20);
    CHECK(d.milnor_number == 66);
    CHECK(eigenvalue_one_multiplicity(d) == 2);
    // Lambda_1 + Lambda_5 - 6 Lambda_10 + 6 Lambda_20
    CHECK(d.mult.at(1) == 1);
    CHECK(d.mult.at(5) == 1);
    CHECK(d.mult.at(10) == -6);
    CHECK(d.mult.at(20) == 6);
}

TEST_CASE("b2 is two for the whole family") {
    for (long n = 1; n <= 50; ++n) CHECK(b2_link(n) == 2);
}

TEST_CASE("milnor number grows as expected") {
    // mu = 2(n+1)(4n+3) for weights (2, 4, 4n, 4n+1) in degree 8n+4
    for (long n : {1L, 2L, 3L, 10L, 25L}) {
        const auto d = monodromy_divisor({2, 4, 4 * n, 4 * n + 1}, 8 * n + 4);
        CHECK(d.milnor_number == 2 * (n + 1) * (4 * n + 3));
    }
}

TEST_CASE("invalid singularity data is rejected") {
    CHECK_THROWS_AS(monodromy_divisor({}, 5), LinkError);
    CHECK_THROWS_AS(monodromy_divisor({1, 1}, 0), LinkError);
    CHECK_THROWS_AS(monodromy_divisor({5, 1}, 5), LinkError);
    CHECK_THROWS_AS(monodromy_divisor({6, 1}, 5), LinkError);
    CHECK_THROWS_AS(monodromy_divisor({0, 1}, 5), LinkError);
    CHECK_THROWS_AS(b2_link(0), LinkError);
    CHECK_THROWS_AS(genus_branch_curve(0), LinkError);
    std::vector<long> too_many(17, 1);
    CHECK_THROWS_AS(monodromy_divisor(too_many, 2), LinkError);
}

TEST_CASE("weighted monomial counts") {
    CHECK(count_weighted_monomials({1, 2, 2}, 3) == 3);   // x^3, xy, xz
    CHECK(count_weighted_monomials({1, 1, 1}, 2) == 6);   // all quadrics in 3 vars
    CHECK(count_weighted_monomials({1, 2, 4}, 4) == 4);   // x^4, x^2 y, y^2, z
    CHECK(count_weighted_monomials({2, 3}, 1) == 0);
    CHECK(count_weighted_monomials({2, 3}, 0) == 1);
}

TEST_CASE("branch curve genus equals n") {
    for (long n = 1; n <= 50; ++n) CHECK(genus_branch_curve(n) == n);
}

TEST_CASE("torsion is n copies of Z/2 + Z/2") {
    CHECK(torsion_h2(2) == std::map<long, long>{{2, 2}});
    CHECK(torsion_h2(7) == std::map<long, long>{{2, 7}});
}

TEST_CASE("classification labels") {
    CHECK(classify_smale(0, {}).label == "S⁵");
    CHECK(classify_smale(0, {}).torsion_str == "0");
    CHECK(classify_smale(1, {}).label == "M∞");
    CHECK(classify_smale(2, {}).label == "2M∞");
    CHECK(classify_smale(2, {{2, 1}}).label == "2M∞ # M₂");
    CHECK(classify_smale(2, {{2, 2}}).label == "2M∞ # 2 M₂");
    CHECK(classify_smale(2, {{2, 2}}).torsion_str == "(Z/2⊕Z/2)²");
    CHECK(classify_smale(0, {{3, 1}}).label == "M₃");
    CHECK(classify_smale(0, {{2, 1}, {3, 2}}).label == "M₂ # 2 M₃");
}

TEST_CASE("full link type for small members") {
    const SmaleType t2 = link_type(2);
    CHECK(t2.b2 == 2);
    CHECK(t2.torsion_pairs == std::map<long, long>{{2, 2}});
    CHECK(t2.label == "2M∞ # 2 M₂");
    CHECK(link_type(1).label == "2M∞ # M₂");
    CHECK(link_type(5).label == "2M∞ # 5 M₂");
    CHECK(link_type(12).torsion_str == "(Z/2⊕Z/2)¹²");
}
