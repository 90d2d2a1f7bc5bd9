#include "deltacert/delta.hpp"

namespace deltacert {

namespace {

Rational polarization_square(const LogDelPezzo& s) {
    const Rational a2 = intersect(s.lattice, s.polarization, s.polarization);
    if (a2.sign() <= 0) throw ModelError("polarization square must be positive on '" + s.name + "'");
    return a2;
}

// P(t).C_target on one segment, as a polynomial in t.
Poly pairing_poly(const LogDelPezzo& s, const ZariskiSegment& seg, Eigen::Index target) {
    Poly f;
    for (Eigen::Index a = 0; a < s.lattice.size(); ++a)
        f += s.lattice.gram(a, target) * seg.p_coeffs[static_cast<std::size_t>(a)];
    return f;
}

} // namespace

PiecewisePoly volume_function(const LogDelPezzo& s, const ZariskiFamily& fam) {
    std::vector<Rational> breaks = fam.breakpoints();
    std::vector<Poly> pieces;
    pieces.reserve(fam.segments.size());
    for (const ZariskiSegment& seg : fam.segments) {
        Poly vol;
        for (Eigen::Index a = 0; a < s.lattice.size(); ++a)
            for (Eigen::Index b = 0; b < s.lattice.size(); ++b)
                vol += s.lattice.gram(a, b) *
                       (seg.p_coeffs[static_cast<std::size_t>(a)] * seg.p_coeffs[static_cast<std::size_t>(b)]);
        pieces.push_back(vol);
    }
    return PiecewisePoly(std::move(breaks), std::move(pieces), /*zero_tail=*/true);
}

PiecewisePoly volume_function(const LogDelPezzo& s, Eigen::Index curve) {
    return volume_function(s, decompose_family(s, curve));
}

Rational s_invariant(const LogDelPezzo& s, const ZariskiFamily& fam) {
    const PiecewisePoly vol = volume_function(s, fam);
    return vol.integrate(Rational(0), fam.tau) / polarization_square(s);
}

Rational s_invariant(const LogDelPezzo& s, Eigen::Index curve) {
    return s_invariant(s, decompose_family(s, curve));
}

Rational fujita_mult_bound(const LogDelPezzo& s, const ZariskiFamily& fam) {
    return s_invariant(s, fam);
}

PiecewisePoly h_function(const LogDelPezzo& s, const ZariskiFamily& fam, const PointOnCurve& p) {
    const Eigen::Index host = s.lattice.index_of(p.host);
    if (host < 0) throw ModelError("point '" + p.name + "' hosted on unknown curve '" + p.host + "'");
    if (host != fam.curve)
        throw ModelError("flag mismatch: family sweeps '" +
                         s.lattice.curves[static_cast<std::size_t>(fam.curve)].name +
                         "' but point '" + p.name + "' lives on '" + p.host + "'");

    std::vector<Rational> breaks = fam.breakpoints();
    std::vector<Poly> pieces;
    pieces.reserve(fam.segments.size());
    for (const ZariskiSegment& seg : fam.segments) {
        const Poly pc = pairing_poly(s, seg, host);
        // ord_p(N(u)|_C) = sum of support coefficients times local orders.
        Poly ord;
        for (Eigen::Index i : seg.support) {
            const auto it = p.negative_support.find(s.lattice.curves[static_cast<std::size_t>(i)].name);
            if (it == p.negative_support.end()) continue;
            ord += it->second * seg.n_coeffs[static_cast<std::size_t>(i)];
        }
        pieces.push_back(pc * ord + Rational(1, 2) * (pc * pc));
    }
    return PiecewisePoly(std::move(breaks), std::move(pieces), /*zero_tail=*/true);
}

Rational s_flag(const LogDelPezzo& s, const ZariskiFamily& fam, const PointOnCurve& p) {
    const PiecewisePoly h = h_function(s, fam, p);
    return Rational(2) * h.integrate(Rational(0), fam.tau) / polarization_square(s);
}

Rational log_discrepancy(const LogDelPezzo& s, const PointOnCurve& p) {
    (void)s;
    if (p.sing.r < 1) throw ModelError("point '" + p.name + "' has invalid singularity order " +
                                       std::to_string(p.sing.r));
    const Rational a = Rational(1, p.sing.r) - p.boundary_local;
    if (a.sign() <= 0)
        throw ModelError("non-positive log discrepancy at '" + p.name + "': boundary multiplicity " +
                         p.boundary_local.str() + " meets 1/" + std::to_string(p.sing.r));
    return a;
}

FlagBound local_delta_bound(const LogDelPezzo& s, const ZariskiFamily& fam, const PointOnCurve& p) {
    FlagBound out;
    out.s_curve = s_invariant(s, fam);
    out.s_flag = s_flag(s, fam, p);
    out.a_log = log_discrepancy(s, p);
    if (out.s_curve.sign() <= 0 || out.s_flag.sign() <= 0)
        throw ModelError("flag (" + p.host + ", " + p.name + ") produced non-positive expected orders");
    out.bound = min(Rational(1) / out.s_curve, out.a_log / out.s_flag);
    return out;
}

} // namespace deltacert
