#pragma once

// The one-parameter family of log del Pezzo pairs the engine certifies:
// exact intersection lattices for the surface S_n (n >= 2) with its half-W
// boundary, the enlargement by the residual conic class, and the weighted
// blow-up model at the 1/(4n+1) point, together with the closed-form targets
// and the inequality ledger that certifies delta > lambda(n) away from the
// flag points.

#include "deltacert/surface.hpp"
#include "deltacert/zariski.hpp"

#include <optional>
#include <vector>

namespace deltacert {

struct FamilyInstance {
    long n = 0;
    LogDelPezzo base;     // curves W, L_xy, R_0, R_1
    LogDelPezzo enlarged; // base plus the residual conic class R_gamma
    LogDelPezzo blowup;   // curves F, L_hat, R_0_hat, R_1_hat
    // 1 - (log discrepancy of F with respect to the boundary pair).
    Rational exceptional_defect; // 3n/(4n+1)
};

// Build and validate all three models; rejects n <= 1 (the n = 1 link
// 2M-infinity # M_2 is covered by earlier classification work).
FamilyInstance build_sn(long n);

// The blow-up model alone (also reachable through build_sn).
LogDelPezzo build_blowup_ow(long n);

// Closed-form targets the computed invariants must reproduce exactly.
struct ClosedForms {
    Rational a2;           // polarization square 9(2n+1)/(8n(4n+1))
    Rational lambda;       // (20n+5)/(20n+4)
    Rational s_l;          // S(L_xy)   = (3n+1)/(2(2n+1))
    Rational s_ri;         // S(R_i)    = (4n^2+3n+1)/(4n(2n+1))
    Rational s_r;          // S(R_gamma)
    Rational s_w;          // S(W)      = 1/(2(4n+1))
    Rational s_f;          // S(F)      = (4n+3)/(4(4n+1))
    Rational sflag_l;      // S-flag at the z-vertex point on L_xy
    Rational sflag_ri;     // S-flag at the order-2 point on R_i
    Rational alog_oz;      // 1/(4n)
    Rational alog_oi;      // 1/4
    Rational delta_oz;     // min(1/s_l, alog_oz/sflag_l)
    Rational delta_oi;     // min(1/s_ri, alog_oi/sflag_ri)
    Rational tau_l;        // 3/2
    Rational tau_ri;       // 3/2
    Rational tau_r;        // 3/4
    Rational tau_w;        // 3/(2(4n+1))
    Rational tau_f;        // 3(2n+1)/(2(4n+1))
};

ClosedForms closed_forms(long n);

// Zariski families and S(C) for every curve the certification consumes,
// computed by the engine (not read from the closed forms).
struct SnComputation {
    ZariskiFamily fam_l, fam_r0, fam_r1, fam_w; // on base
    ZariskiFamily fam_r;                        // on enlarged
    ZariskiFamily fam_f;                        // on blowup
    Rational s_l, s_r0, s_r1, s_w, s_r, s_f;
};

SnComputation compute_sn(const FamilyInstance& fam);

// One certified inequality.  Everything is normalized to lhs REL rhs with
// REL in {<, <=}; margin = rhs - lhs.  Entries that consume the configured
// slack parameter carry eps_max, the largest slack that still passes.
struct LedgerEntry {
    std::string id;
    std::string statement;
    std::string note;
    Rational lhs;
    Rational rhs;
    bool strict = true;
    bool uses_epsilon = false;
    bool pass = false;
    Rational margin;
    std::optional<Rational> eps_max;
};

// The full inequality ledger for one n: the S-invariant estimates, the
// smooth-point exclusion chain, and the exceptional-divisor chain that
// settles the 1/(4n+1) point.  `comp` supplies the engine-computed
// S-invariants so the ledger certifies the model, not retyped constants.
std::vector<LedgerEntry> inequality_ledger(const FamilyInstance& fam, const SnComputation& comp,
                                           const Rational& epsilon);

} // namespace deltacert
