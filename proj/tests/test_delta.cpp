#include "deltacert/delta.hpp"
#include "deltacert/family_sn.hpp"

#include <doctest.h>

using namespace deltacert;

namespace {
struct Fixture {
    FamilyInstance fam = build_sn(2);
    const LogDelPezzo& base = fam.base;
    ZariskiFamily fam_l = decompose_family(base, base.curve_index("L_xy"));
    ZariskiFamily fam_r0 = decompose_family(base, base.curve_index("R_0"));
};
} // namespace

TEST_CASE("volume function of the fiber class") {
    Fixture fx;
    const PiecewisePoly vol = volume_function(fx.base, fx.fam_l);
    CHECK(vol.is_continuous());
    CHECK(vol.zero_tail());
    CHECK(vol.eval(Rational(0)) == Rational(5, 16));
    CHECK(vol.eval(Rational(1)) == Rational(1, 16));
    CHECK(vol.eval(Rational(3, 2)) == Rational(0));
    CHECK(vol.eval(Rational(7)) == Rational(0));
    // the tail piece is (3 - 2t)^2 / 16
    CHECK(vol.pieces().back() ==
          Poly{Rational(9, 16), Rational(-3, 4), Rational(1, 4)});
    // strictly decreasing inside the range
    CHECK(vol.eval(Rational(1, 4)) > vol.eval(Rational(1, 2)));
    CHECK(vol.eval(Rational(5, 4)) > vol.eval(Rational(11, 8)));
}

TEST_CASE("expected vanishing orders at n = 2") {
    Fixture fx;
    CHECK(s_invariant(fx.base, fx.fam_l) == Rational(7, 10));
    CHECK(s_invariant(fx.base, fx.fam_r0) == Rational(23, 40));
    CHECK(s_invariant(fx.base, fx.base.curve_index("W")) == Rational(1, 18));
    CHECK(fujita_mult_bound(fx.base, fx.fam_l) == Rational(7, 10));

    const LogDelPezzo& enl = fx.fam.enlarged;
    CHECK(s_invariant(enl, enl.curve_index("R_gamma")) == Rational(23, 90));
    const LogDelPezzo& bl = fx.fam.blowup;
    CHECK(s_invariant(bl, bl.curve_index("F")) == Rational(11, 36));
}

TEST_CASE("flag h-functions at the marked points") {
    Fixture fx;
    const PointOnCurve* oz = fx.base.find_point("L_xy", "O_z");
    REQUIRE(oz);
    const PiecewisePoly h = h_function(fx.base, fx.fam_l, *oz);
    CHECK(h.is_continuous());
    // no contracted curve passes through O_z, so h = (P.C)^2/2 throughout
    CHECK(h.eval(Rational(1)) == Rational(1, 128));
    CHECK(h.eval(Rational(0)) == Rational(1, 2) * Rational(1, 24) * Rational(1, 24));
    CHECK(s_flag(fx.base, fx.fam_l, *oz) == Rational(23, 360));

    const PointOnCurve* o0 = fx.base.find_point("R_0", "O_0");
    REQUIRE(o0);
    const PiecewisePoly h0 = h_function(fx.base, fx.fam_r0, *o0);
    CHECK(h0.eval(Rational(0)) == Rational(1, 288));
    CHECK(s_flag(fx.base, fx.fam_r0, *o0) == Rational(47, 720));
}

TEST_CASE("h-function picks up orders along the contracted support") {
    // At the blowup, the strict transform of a section passes through the
    // marked point on the exceptional curve, so the first moment term is
    // active on the second segment.
    Fixture fx;
    const LogDelPezzo& bl = fx.fam.blowup;
    const ZariskiFamily f = decompose_family(bl, bl.curve_index("F"));
    const PointOnCurve* q = bl.find_point("F", "q_R0");
    REQUIRE(q);
    const PiecewisePoly h = h_function(bl, f, *q);
    CHECK(h.is_continuous());
    // on [0, 1/12]: h = (9t/2)^2 / 2
    CHECK(h.eval(Rational(1, 18)) == Rational(1, 32));
    // at t = 1/2: P.F = 5/12 - t/2 = 1/6, ord = 2t - 1/6 = 5/6
    CHECK(h.eval(Rational(1, 2)) ==
          Rational(1, 6) * Rational(5, 6) + Rational(1, 2) * Rational(1, 36));
    CHECK(s_flag(bl, f, *q) == Rational(23, 40));
}

TEST_CASE("flag data must live on the swept curve") {
    Fixture fx;
    const PointOnCurve* o0 = fx.base.find_point("R_0", "O_0");
    REQUIRE(o0);
    CHECK_THROWS_AS(h_function(fx.base, fx.fam_l, *o0), ModelError);
    CHECK_THROWS_AS(s_flag(fx.base, fx.fam_l, *o0), ModelError);
}

TEST_CASE("log discrepancies at the marked points") {
    Fixture fx;
    CHECK(log_discrepancy(fx.base, *fx.base.find_point("L_xy", "O_z")) == Rational(1, 8));
    CHECK(log_discrepancy(fx.base, *fx.base.find_point("R_0", "O_0")) == Rational(1, 4));
    CHECK(log_discrepancy(fx.base, *fx.base.find_point("L_xy", "O_w")) == Rational(1, 9));

    PointOnCurve bad = *fx.base.find_point("L_xy", "O_z");
    bad.boundary_local = Rational(1, 4); // = 1/r: zero discrepancy is rejected
    CHECK_THROWS_AS(log_discrepancy(fx.base, bad), ModelError);
}

TEST_CASE("local delta bounds reproduce the certified values") {
    Fixture fx;
    const FlagBound bz = local_delta_bound(fx.base, fx.fam_l, *fx.base.find_point("L_xy", "O_z"));
    CHECK(bz.s_curve == Rational(7, 10));
    CHECK(bz.s_flag == Rational(23, 360));
    CHECK(bz.a_log == Rational(1, 8));
    CHECK(bz.bound == Rational(10, 7)); // min(10/7, 45/23)

    const FlagBound b0 = local_delta_bound(fx.base, fx.fam_r0, *fx.base.find_point("R_0", "O_0"));
    CHECK(b0.bound == Rational(40, 23)); // min(40/23, 180/47)

    // both branches of the min are live: for O_z the curve term wins, and
    // the flag term 45/23 would exceed it
    CHECK(bz.a_log / bz.s_flag == Rational(45, 23));
}

TEST_CASE("volume agrees with the pointwise positive part everywhere") {
    Fixture fx;
    const PiecewisePoly vol = volume_function(fx.base, fx.fam_r0);
    for (const Rational& t :
         {Rational(0), Rational(1, 8), Rational(3, 8), Rational(1), Rational(10, 7), Rational(3, 2)}) {
        const auto d = decompose_at(fx.base, fx.base.curve_index("R_0"), t);
        CHECK(vol.eval(t) == intersect(fx.base.lattice, d.p, d.p));
    }
}
