#include "deltacert/family_sn.hpp"

#include "deltacert/delta.hpp"

#include <string>

namespace deltacert {

namespace {

void check_n(long n) {
    if (n <= 1)
        throw ModelError("the family needs n >= 2 (the n = 1 member's link, "
                         "2M∞ # M₂, is covered by the earlier classification)");
}

std::string sn_name(long n) { return "S_" + std::to_string(n); }

LogDelPezzo build_base(long n) {
    const Rational N(n);
    LogDelPezzo s;
    s.name = sn_name(n);
    s.lattice.curves = {{"W"}, {"L_xy"}, {"R_0"}, {"R_1"}};
    const Rational two(2), half(1, 2);
    const Rational w2 = (two * N + 1) * (Rational(4) * N + 1) / (two * N);
    const Rational wl = Rational(1) / (two * N);
    const Rational l2 = -(Rational(4) * N - 1) / (two * N * (Rational(4) * N + 1));
    const Rational lr = Rational(1) / (Rational(4) * N + 1);
    const Rational r2 = -(two * N + 1) / (two * (Rational(4) * N + 1));
    const Rational rr = N / (Rational(4) * N + 1);

    RMatrix g(4, 4);
    g << w2, wl, half, half,
         wl, l2, lr, lr,
         half, lr, r2, rr,
         half, lr, rr, r2;
    s.lattice.gram = g;

    s.boundary = DivisorClass::Zero(4);
    s.boundary(0) = half;
    s.polarization = DivisorClass::Zero(4);
    const Rational three_half(3, 2);
    s.polarization(1) = three_half;
    s.polarization(2) = three_half;
    s.polarization(3) = three_half;

    const Rational quarter(1, 4);
    const Rational inv_4n = Rational(1) / (Rational(4) * N);
    const Rational inv_4n1 = Rational(1) / (Rational(4) * N + 1);
    const Rational n_over_4n1 = N / (Rational(4) * N + 1);

    s.points.push_back({"O_z", "L_xy", {2 * n, 1, 1}, inv_4n, {}});
    s.points.push_back({"O_0", "R_0", {2, 1, 1}, quarter, {}});
    s.points.push_back({"O_1", "R_1", {2, 1, 1}, quarter, {}});
    s.points.push_back({"O_w", "L_xy", {4 * n + 1, 1, n}, Rational(0),
                        {{"R_0", inv_4n1}, {"R_1", inv_4n1}}});
    s.points.push_back({"O_w", "R_0", {4 * n + 1, 1, n}, Rational(0),
                        {{"L_xy", inv_4n1}, {"R_1", n_over_4n1}}});
    s.points.push_back({"O_w", "R_1", {4 * n + 1, 1, n}, Rational(0),
                        {{"L_xy", inv_4n1}, {"R_0", n_over_4n1}}});
    return s;
}

LogDelPezzo build_enlarged(long n) {
    const Rational N(n);
    LogDelPezzo base = build_base(n);
    LogDelPezzo s;
    s.name = sn_name(n) + "_ext";
    s.lattice.curves = base.lattice.curves;
    s.lattice.curves.push_back({"R_gamma"});

    RMatrix g = RMatrix::Zero(5, 5);
    g.topLeftCorner(4, 4) = base.lattice.gram;
    const Rational inv_2n = Rational(1) / (Rational(2) * N);
    // R_gamma pairings: the residual conic of the tangent-pencil member.
    g(0, 4) = g(4, 0) = (Rational(4) * N + 1) / (Rational(2) * N); // W.R
    g(1, 4) = g(4, 1) = inv_2n;                                     // L.R
    g(2, 4) = g(4, 2) = Rational(0);
    g(3, 4) = g(4, 3) = Rational(0);
    g(4, 4) = inv_2n;
    s.lattice.gram = g;

    s.boundary = DivisorClass::Zero(5);
    s.boundary(0) = Rational(1, 2);
    s.polarization = DivisorClass::Zero(5);
    for (Eigen::Index i = 1; i <= 3; ++i) s.polarization(i) = Rational(3, 2);

    s.points = base.points;
    return s;
}

} // namespace

LogDelPezzo build_blowup_ow(long n) {
    check_n(n);
    const Rational N(n);
    LogDelPezzo s;
    s.name = sn_name(n) + "_hat";
    s.lattice.curves = {{"F"}, {"L_hat"}, {"R_0_hat"}, {"R_1_hat"}};

    const Rational inv_n = Rational(1) / N;
    RMatrix g(4, 4);
    g << -(Rational(4) * N + 1) / N, inv_n, Rational(1), Rational(1),
         inv_n, -Rational(1) / (Rational(2) * N), Rational(0), Rational(0),
         Rational(1), Rational(0), Rational(-1, 2), Rational(0),
         Rational(1), Rational(0), Rational(0), Rational(-1, 2);
    s.lattice.gram = g;

    // The strict transform of the boundary misses every tracked curve here;
    // its effect enters through the polarization pullback and the defect.
    s.boundary = DivisorClass::Zero(4);

    const Rational beta = Rational(3) * (Rational(2) * N + 1) / (Rational(2) * (Rational(4) * N + 1));
    s.polarization = DivisorClass::Zero(4);
    s.polarization(0) = beta;
    for (Eigen::Index i = 1; i <= 3; ++i) s.polarization(i) = Rational(3, 2);

    s.points.push_back({"q_L", "F", {n, n - 1, 1}, Rational(0), {{"L_hat", inv_n}}});
    s.points.push_back({"q_R0", "F", {1, 1, 1}, Rational(0), {{"R_0_hat", Rational(1)}}});
    s.points.push_back({"q_R1", "F", {1, 1, 1}, Rational(0), {{"R_1_hat", Rational(1)}}});

    require_valid(s);
    return s;
}

FamilyInstance build_sn(long n) {
    check_n(n);
    FamilyInstance fam;
    fam.n = n;
    fam.base = build_base(n);
    fam.enlarged = build_enlarged(n);
    fam.blowup = build_blowup_ow(n);
    const Rational N(n);
    fam.exceptional_defect = Rational(3) * N / (Rational(4) * N + 1);
    require_valid(fam.base);
    require_valid(fam.enlarged);
    return fam;
}

ClosedForms closed_forms(long n) {
    check_n(n);
    const Rational N(n);
    const Rational one(1), two(2), three(3), four(4);
    ClosedForms cf;
    cf.a2 = Rational(9) * (two * N + one) / (Rational(8) * N * (four * N + one));
    cf.lambda = (Rational(20) * N + Rational(5)) / (Rational(20) * N + four);
    cf.s_l = (three * N + one) / (two * (two * N + one));
    cf.s_ri = (four * N * N + three * N + one) / (four * N * (two * N + one));
    cf.s_r = (Rational(16) * N * N * N + Rational(16) * N * N + Rational(7) * N + one) /
             (two * (two * N + one) * (four * N + one) * (four * N + one));
    cf.s_w = one / (two * (four * N + one));
    cf.s_f = (four * N + three) / (four * (four * N + one));
    cf.sflag_l = (four * N * N + three * N + one) / (four * N * (two * N + one) * (four * N + one));
    cf.sflag_ri = (Rational(8) * N * N + Rational(7) * N + one) /
                  (Rational(8) * N * (two * N + one) * (four * N + one));
    cf.alog_oz = one / (four * N);
    cf.alog_oi = Rational(1, 4);
    cf.delta_oz = min(one / cf.s_l, cf.alog_oz / cf.sflag_l);
    cf.delta_oi = min(one / cf.s_ri, cf.alog_oi / cf.sflag_ri);
    cf.tau_l = Rational(3, 2);
    cf.tau_ri = Rational(3, 2);
    cf.tau_r = Rational(3, 4);
    cf.tau_w = three / (two * (four * N + one));
    cf.tau_f = three * (two * N + one) / (two * (four * N + one));
    return cf;
}

SnComputation compute_sn(const FamilyInstance& fam) {
    SnComputation c;
    const auto& b = fam.base;
    c.fam_w = decompose_family(b, b.curve_index("W"));
    c.fam_l = decompose_family(b, b.curve_index("L_xy"));
    c.fam_r0 = decompose_family(b, b.curve_index("R_0"));
    c.fam_r1 = decompose_family(b, b.curve_index("R_1"));
    c.fam_r = decompose_family(fam.enlarged, fam.enlarged.curve_index("R_gamma"));
    c.fam_f = decompose_family(fam.blowup, fam.blowup.curve_index("F"));
    c.s_w = s_invariant(b, c.fam_w);
    c.s_l = s_invariant(b, c.fam_l);
    c.s_r0 = s_invariant(b, c.fam_r0);
    c.s_r1 = s_invariant(b, c.fam_r1);
    c.s_r = s_invariant(fam.enlarged, c.fam_r);
    c.s_f = fujita_mult_bound(fam.blowup, c.fam_f);
    return c;
}

std::vector<LedgerEntry> inequality_ledger(const FamilyInstance& fam, const SnComputation& comp,
                                           const Rational& epsilon) {
    if (epsilon.sign() < 0) throw ModelError("negative slack parameter " + epsilon.str());
    const Rational N(fam.n);
    const Rational one(1), two(2), three(3), four(4), five(5), eight(8);
    const ClosedForms cf = closed_forms(fam.n);
    const Rational lambda = cf.lambda;

    std::vector<LedgerEntry> ledger;
    auto push = [&](std::string id, std::string statement, std::string note, Rational lhs, Rational rhs,
                    bool strict, bool uses_eps, std::optional<Rational> eps_max) {
        LedgerEntry e;
        e.id = std::move(id);
        e.statement = std::move(statement);
        e.note = std::move(note);
        e.lhs = std::move(lhs);
        e.rhs = std::move(rhs);
        e.strict = strict;
        e.uses_epsilon = uses_eps;
        e.margin = e.rhs - e.lhs;
        e.pass = strict ? (e.lhs < e.rhs) : (e.lhs <= e.rhs);
        e.eps_max = std::move(eps_max);
        ledger.push_back(std::move(e));
    };

    // --- Expected-order estimates feeding the exclusion arguments. ---
    const Rational bound_b = (three * N + two) / (two * (two * N + one));
    const Rational bound_bi = (eight * N * N + Rational(6) * N + three) / (eight * N * (two * N + one));
    push("estimate-a", "S(W) < 1/(8n)",
         "multiplier budget along the boundary curve; lhs computed by the sweep",
         comp.s_w, one / (eight * N), true, false, std::nullopt);
    push("estimate-b", "S(L_xy) < (3n+2)/(2(2n+1))",
         "worst-case coefficient b consumed by the smooth-point chain; lhs computed by the sweep",
         comp.s_l, bound_b, true, false, std::nullopt);
    push("estimate-b0", "S(R_0) < (8n^2+6n+3)/(8n(2n+1))",
         "worst-case coefficient b_i; lhs computed by the sweep",
         comp.s_r0, bound_bi, true, false, std::nullopt);
    push("estimate-b1", "S(R_1) < (8n^2+6n+3)/(8n(2n+1))",
         "worst-case coefficient b_i; lhs computed by the sweep",
         comp.s_r1, bound_bi, true, false, std::nullopt);
    push("estimate-c", "S(R_gamma) < 3/10",
         "uniform bound on the residual conic's expected order; lhs computed by the sweep",
         comp.s_r, Rational(3, 10), true, false, std::nullopt);

    // --- Smooth-point exclusion chain, with worst-case substitutions. ---
    const auto& b = fam.base;
    const Eigen::Index iL = b.curve_index("L_xy");
    const Eigen::Index iR0 = b.curve_index("R_0"), iR1 = b.curve_index("R_1");
    const DivisorClass A = b.polarization;
    const Rational b_worst(4, 5), bi_worst(3, 5), c_worst(3, 10);

    push("smooth-b-worst", "(3n+2)/(2(2n+1)) <= 4/5",
         "the b-coefficient never exceeds 4/5 (equality at n = 2)",
         bound_b, b_worst, false, false, std::nullopt);
    push("smooth-bi-worst", "(8n^2+6n+3)/(8n(2n+1)) <= 3/5",
         "the b_i-coefficient never exceeds 3/5",
         bound_bi, bi_worst, false, false, std::nullopt);
    push("smooth-lambda-b", "lambda * 4/5 <= 1",
         "scaled multiplier stays a valid multiplier along L_xy",
         lambda * b_worst, one, false, false, std::nullopt);

    const Rational al = intersect(b.lattice, A, b.lattice.basis_vector(iL));
    const Rational l2 = b.lattice.gram(iL, iL);
    push("smooth-L-pairing", "(A - b L_xy).L_xy < 1/lambda with b = 4/5",
         "residual pairing against L_xy after removing the worst-case multiple; computed from the lattice",
         al - b_worst * l2, one / lambda, true, false, std::nullopt);

    push("smooth-lambda-bi", "lambda * 3/5 <= 1",
         "scaled multiplier stays a valid multiplier along R_i",
         lambda * bi_worst, one, false, false, std::nullopt);

    const Rational ar0 = intersect(b.lattice, A, b.lattice.basis_vector(iR0));
    const Rational ar1 = intersect(b.lattice, A, b.lattice.basis_vector(iR1));
    const Rational pairing_r0 = ar0 - b.lattice.gram(iR0, iR0);
    const Rational pairing_r1 = ar1 - b.lattice.gram(iR1, iR1);
    push("smooth-Ri-pairing", "(A - R_i).R_i < 1/lambda",
         "identical for R_0 and R_1 by symmetry; the larger of the two computed values is certified",
         max(pairing_r0, pairing_r1), one / lambda, true, false, std::nullopt);

    push("smooth-lambda-c", "lambda * 3/10 <= 1",
         "scaled multiplier stays a valid multiplier along the residual conic",
         lambda * c_worst, one, false, false, std::nullopt);

    const auto& e = fam.enlarged;
    const Rational a_dot_r =
        intersect(e.lattice, e.polarization, e.lattice.basis_vector(e.curve_index("R_gamma")));
    push("smooth-R-pairing", "A.R_gamma < 1/lambda",
         "pencil members through a smooth point off W; computed from the enlarged lattice",
         a_dot_r, one / lambda, true, false, std::nullopt);

    push("smooth-W-transversal", "1/2 + lambda * A.R_gamma < 1",
         "boundary multiplicity 1/2 plus the scaled transversal pencil multiplicity",
         Rational(1, 2) + lambda * a_dot_r, one, true, false, std::nullopt);

    // Tangential chain at a point of W: a = 1/(8n) bounds the W-multiplier,
    // c = 3/10 the conic multiplier, m = 3/(4n) = A.R_gamma the pencil
    // multiplicity through the point.
    const Rational a_sub = one / (eight * N);
    const Rational m_sub = a_dot_r;
    push("smooth-tangent-d", "lambda (a + c + m) - 1/2 <= 1 with a = 1/(8n), c = 3/10, m = 3/(4n)",
         "first blow-up multiplicity bound in the tangential chain",
         lambda * (a_sub + c_worst + m_sub) - Rational(1, 2), one, false, false, std::nullopt);
    push("smooth-tangent-mult", "lambda * m <= 1 with m = 3/(4n)",
         "scaled pencil multiplicity at the tangential point",
         lambda * m_sub, one, false, false, std::nullopt);
    push("smooth-tangent-e", "2 lambda (a + c + m) - 1 <= 1",
         "second blow-up multiplicity bound in the tangential chain",
         two * lambda * (a_sub + c_worst + m_sub) - one, one, false, false, std::nullopt);
    push("smooth-tangent-F-mult", "lambda * m < 1",
         "exceptional pairing of the scaled pencil part",
         lambda * m_sub, one, true, false, std::nullopt);
    push("smooth-tangent-F-W", "1/2 + lambda (a + m) < 1",
         "exceptional pairing of the boundary-plus-pencil part",
         Rational(1, 2) + lambda * (a_sub + m_sub), one, true, false, std::nullopt);
    push("smooth-tangent-F-R", "lambda (c + m) < 1",
         "exceptional pairing of the conic-plus-pencil part",
         lambda * (c_worst + m_sub), one, true, false, std::nullopt);
    push("smooth-tangent-F-E", "lambda (a + c + 2m) - 1/2 < 1",
         "exceptional pairing after the second blow-up",
         lambda * (a_sub + c_worst + two * m_sub) - Rational(1, 2), one, true, false, std::nullopt);

    // --- Exceptional-divisor chain settling the 1/(4n+1) point. ---
    const Rational defect = fam.exceptional_defect;
    {
        const Rational margin0 = one - defect - lambda * comp.s_f;
        push("excdiv-discrepancy", "defect + lambda (S(F) + eps) < 1 with defect = 3n/(4n+1)",
             "scaled expected order of the exceptional divisor stays under its log discrepancy; "
             "S(F) computed on the blow-up model",
             defect + lambda * (comp.s_f + epsilon), one, true, true, margin0 / lambda);
    }
    push("excdiv-generic-mu", "3/4 + (8n^2+6n+3)/(16n(2n+1)) < n/lambda",
         "multiplicity along F of the worst candidate through a generic exceptional point",
         Rational(3, 4) + bound_bi / two, N / lambda, true, false, std::nullopt);
    {
        const Rational lhs0 = (four * N + three) / (four * N);
        const Rational rhs = (Rational(40) * N - Rational(7)) / (Rational(20) * N + Rational(10));
        push("excdiv-ri-closure", "(4n+3)/(4n) + eps < (40n-7)/(20n+10)",
             "contradiction closes at the exceptional point over the R_i branch",
             lhs0 + epsilon, rhs, true, true, rhs - lhs0);
    }
    {
        const Rational lhs0 = (Rational(16) * N + three) / (Rational(16) * N + four);
        const Rational rhs = (Rational(20) * N + four) / (Rational(20) * N + five);
        push("excdiv-l-closure", "(16n+3)/(16n+4) + eps < (20n+4)/(20n+5)",
             "contradiction closes at the exceptional point over the L_xy branch",
             lhs0 + epsilon, rhs, true, true, rhs - lhs0);
    }
    push("lambda-sanity", "1 < lambda",
         "the certified threshold genuinely exceeds the stability boundary",
         one, lambda, true, false, std::nullopt);

    return ledger;
}

} // namespace deltacert
