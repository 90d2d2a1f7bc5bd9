#include "deltacert/zariski.hpp"

#include "deltacert/linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace deltacert {

namespace {

constexpr int kMaxPivots = 64;

std::string curve_name(const LogDelPezzo& s, Eigen::Index i) {
    return s.lattice.curves[static_cast<std::size_t>(i)].name;
}

RMatrix support_gram(const LogDelPezzo& s, const std::vector<Eigen::Index>& support) {
    const auto k = static_cast<Eigen::Index>(support.size());
    RMatrix g(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            g(i, j) = s.lattice.gram(support[static_cast<std::size_t>(i)], support[static_cast<std::size_t>(j)]);
    return g;
}

void check_curve_arg(const LogDelPezzo& s, Eigen::Index curve) {
    if (curve < 0 || curve >= s.lattice.size())
        throw ModelError("curve index out of range for surface '" + s.name + "'");
}

} // namespace

std::vector<Rational> ZariskiFamily::breakpoints() const {
    std::vector<Rational> b;
    b.reserve(segments.size() + 1);
    for (const ZariskiSegment& seg : segments) b.push_back(seg.t_lo);
    b.push_back(segments.back().t_hi);
    return b;
}

ZariskiDecomposition ZariskiFamily::at(const Rational& t) const {
    if (t < Rational(0) || t > tau)
        throw NotPseudoeffectiveError("family evaluation at t = " + t.str() + " outside [0, " + tau.str() + "]");
    const ZariskiSegment* seg = &segments.back();
    for (const ZariskiSegment& s : segments)
        if (t <= s.t_hi) { seg = &s; break; }
    ZariskiDecomposition out;
    const auto k = static_cast<Eigen::Index>(seg->p_coeffs.size());
    out.p = DivisorClass::Zero(k);
    out.n = DivisorClass::Zero(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        out.p(j) = seg->p_coeffs[static_cast<std::size_t>(j)].eval(t);
        out.n(j) = seg->n_coeffs[static_cast<std::size_t>(j)].eval(t);
    }
    for (Eigen::Index i : seg->support)
        if (!out.n(i).is_zero()) out.support.push_back(i);
    return out;
}

ZariskiDecomposition decompose_at(const LogDelPezzo& s, Eigen::Index curve, const Rational& t) {
    check_curve_arg(s, curve);
    if (t.sign() < 0) throw ModelError("decompose_at needs t >= 0, got " + t.str());

    const Eigen::Index k = s.lattice.size();
    const DivisorClass d = s.polarization - t * s.lattice.basis_vector(curve);

    std::vector<Eigen::Index> support;
    RVector x(0);

    for (int round = 0; round < kMaxPivots; ++round) {
        const auto m = static_cast<Eigen::Index>(support.size());
        if (m > 0) {
            RVector rhs(m);
            for (Eigen::Index i = 0; i < m; ++i)
                rhs(i) = intersect(s.lattice, d, s.lattice.basis_vector(support[static_cast<std::size_t>(i)]));
            x = solve_linear(support_gram(s, support), rhs);

            // Coefficients that went negative leave the support.
            std::vector<Eigen::Index> kept;
            for (Eigen::Index i = 0; i < m; ++i)
                if (x(i).sign() >= 0) kept.push_back(support[static_cast<std::size_t>(i)]);
            if (kept.size() != support.size()) {
                support = std::move(kept);
                continue;
            }
        }

        DivisorClass n = DivisorClass::Zero(k);
        for (Eigen::Index i = 0; i < m; ++i) n(support[static_cast<std::size_t>(i)]) = x(i);
        const DivisorClass p = d - n;

        std::vector<Eigen::Index> violators;
        for (Eigen::Index j = 0; j < k; ++j)
            if (intersect(s.lattice, p, s.lattice.basis_vector(j)).sign() < 0) violators.push_back(j);

        if (violators.empty()) {
            if (intersect(s.lattice, p, p).sign() < 0)
                throw NotPseudoeffectiveError("A - " + t.str() + " " + curve_name(s, curve) +
                                              " has negative volume: beyond the pseudoeffective threshold");
            ZariskiDecomposition out;
            out.p = p;
            out.n = n;
            out.support = support;
            return out;
        }

        for (Eigen::Index j : violators)
            if (std::find(support.begin(), support.end(), j) == support.end()) support.push_back(j);
        std::sort(support.begin(), support.end());

        if (!is_negative_definite(support_gram(s, support))) {
            std::ostringstream os;
            os << "support {";
            for (std::size_t i = 0; i < support.size(); ++i)
                os << (i ? ", " : "") << curve_name(s, support[i]);
            os << "} is not negative definite: A - " << t.str() << " " << curve_name(s, curve)
               << " is not pseudoeffective";
            throw NotPseudoeffectiveError(os.str());
        }
    }
    throw ZariskiError("support iteration did not converge for A - " + t.str() + " " + curve_name(s, curve));
}

namespace {

// Affine coefficient functions x(t) = xc + t*xs on a fixed support.
struct AffineSolution {
    RVector xc, xs;
};

AffineSolution solve_support_affine(const LogDelPezzo& s, Eigen::Index curve,
                                    const std::vector<Eigen::Index>& support) {
    const auto m = static_cast<Eigen::Index>(support.size());
    AffineSolution sol{RVector(m), RVector(m)};
    if (m == 0) return sol;
    RVector rhs0(m), rhs1(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto ci = s.lattice.basis_vector(support[static_cast<std::size_t>(i)]);
        rhs0(i) = intersect(s.lattice, s.polarization, ci);
        rhs1(i) = -s.lattice.gram(curve, support[static_cast<std::size_t>(i)]);
    }
    const RMatrix g = support_gram(s, support);
    sol.xc = solve_linear(g, rhs0);
    sol.xs = solve_linear(g, rhs1);
    return sol;
}

// Smallest root of the affine function f (value v0 at t0, slope m) that lies
// strictly right of t0, when f is heading negative.
std::optional<Rational> downward_crossing(const Rational& v0, const Rational& slope, const Rational& t0) {
    if (slope.sign() >= 0) return std::nullopt;
    // v0 >= 0 is an invariant of the sweep; the crossing is t0 + v0/(-slope).
    return t0 + v0 / (-slope);
}

// The two rational roots of a quadratic, if they are rational.
std::optional<std::pair<Rational, Rational>> rational_quadratic_roots(const Poly& q) {
    const Rational a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    const Rational disc = b * b - Rational(4) * a * c;
    if (disc.sign() < 0) return std::nullopt;
    mpz_class sn, sd, rem;
    mpz_sqrtrem(sn.get_mpz_t(), rem.get_mpz_t(), disc.numerator().get_mpz_t());
    if (rem != 0) return std::nullopt;
    mpz_sqrtrem(sd.get_mpz_t(), rem.get_mpz_t(), disc.denominator().get_mpz_t());
    if (rem != 0) return std::nullopt;
    const Rational s(sn, sd);
    Rational r1 = (-b - s) / (Rational(2) * a);
    Rational r2 = (-b + s) / (Rational(2) * a);
    if (r2 < r1) std::swap(r1, r2);
    return std::make_pair(r1, r2);
}

} // namespace

ZariskiFamily decompose_family(const LogDelPezzo& s, Eigen::Index curve) {
    check_curve_arg(s, curve);
    const Eigen::Index k = s.lattice.size();

    ZariskiFamily fam;
    fam.curve = curve;

    std::vector<Eigen::Index> support;
    Rational t0(0);

    for (int round = 0; round < kMaxPivots; ++round) {
        const AffineSolution sol = solve_support_affine(s, curve, support);

        // P(t) componentwise, affine in t.
        std::vector<Poly> p_coeffs(static_cast<std::size_t>(k)), n_coeffs(static_cast<std::size_t>(k));
        for (Eigen::Index j = 0; j < k; ++j) {
            Rational c0 = s.polarization(j), c1(0);
            if (j == curve) c1 -= Rational(1);
            p_coeffs[static_cast<std::size_t>(j)] = Poly::affine(c0, c1);
        }
        for (std::size_t i = 0; i < support.size(); ++i) {
            const auto j = static_cast<std::size_t>(support[i]);
            const auto ii = static_cast<Eigen::Index>(i);
            n_coeffs[j] = Poly::affine(sol.xc(ii), sol.xs(ii));
            p_coeffs[j] -= n_coeffs[j];
        }

        // Volume quadratic P(t).P(t) and pairings P(t).C_j.
        Poly vol;
        for (Eigen::Index a = 0; a < k; ++a)
            for (Eigen::Index b = 0; b < k; ++b)
                vol += s.lattice.gram(a, b) * (p_coeffs[static_cast<std::size_t>(a)] * p_coeffs[static_cast<std::size_t>(b)]);

        std::vector<Poly> pair(static_cast<std::size_t>(k));
        for (Eigen::Index j = 0; j < k; ++j) {
            Poly f;
            for (Eigen::Index a = 0; a < k; ++a)
                f += s.lattice.gram(a, j) * p_coeffs[static_cast<std::size_t>(a)];
            pair[static_cast<std::size_t>(j)] = f;
        }

        // Sanity at the segment start.
        if (vol.eval(t0).sign() < 0)
            throw ZariskiError("negative volume at t = " + t0.str() + " while sweeping " + curve_name(s, curve));
        for (Eigen::Index j = 0; j < k; ++j)
            if (pair[static_cast<std::size_t>(j)].eval(t0).sign() < 0)
                throw ZariskiError("P not nef against " + curve_name(s, j) + " at segment start t = " + t0.str());
        for (Eigen::Index i : support)
            if (n_coeffs[static_cast<std::size_t>(i)].eval(t0).sign() < 0)
                throw ZariskiError("negative N coefficient on " + curve_name(s, i) + " at segment start t = " + t0.str());

        // A pairing or coefficient can sit at exactly zero with a slope that
        // only turned negative after the last pivot: pivot again in place
        // rather than emit a zero-length segment.
        {
            std::vector<Eigen::Index> next = support;
            bool degenerate = false;
            for (Eigen::Index j = 0; j < k; ++j) {
                if (std::find(support.begin(), support.end(), j) != support.end()) continue;
                const Poly& f = pair[static_cast<std::size_t>(j)];
                if (f.eval(t0).is_zero() && f.coeff(1).sign() < 0) { next.push_back(j); degenerate = true; }
            }
            for (Eigen::Index i : support) {
                const Poly& xi = n_coeffs[static_cast<std::size_t>(i)];
                if (xi.eval(t0).is_zero() && xi.coeff(1).sign() < 0) {
                    next.erase(std::remove(next.begin(), next.end(), i), next.end());
                    degenerate = true;
                }
            }
            if (degenerate) {
                std::sort(next.begin(), next.end());
                if (next == support)
                    throw ZariskiError("degenerate pivot stalled at t = " + t0.str() + " while sweeping " +
                                       curve_name(s, curve));
                if (!is_negative_definite(support_gram(s, next)))
                    throw ZariskiError("degenerate pivot produced a non-negative-definite support at t = " + t0.str());
                support = std::move(next);
                continue;
            }
        }

        // Next support event: a nef pairing or a support coefficient heading
        // through zero.
        std::optional<Rational> t_event;
        auto consider = [&](const std::optional<Rational>& r) {
            if (!r) return;
            if (*r <= t0) return; // degenerate; handled by the pivot below when it is a true event
            if (!t_event || *r < *t_event) t_event = r;
        };
        for (Eigen::Index j = 0; j < k; ++j) {
            if (std::find(support.begin(), support.end(), j) != support.end()) continue;
            const Poly& f = pair[static_cast<std::size_t>(j)];
            consider(downward_crossing(f.eval(t0), f.coeff(1), t0));
        }
        for (std::size_t i = 0; i < support.size(); ++i) {
            const Poly& xi = n_coeffs[static_cast<std::size_t>(support[i])];
            consider(downward_crossing(xi.eval(t0), xi.coeff(1), t0));
        }

        // Where does the volume vanish on (t0, t_event]?
        auto volume_root_before = [&](const std::optional<Rational>& limit) -> std::optional<Rational> {
            if (vol.degree() <= 0) return std::nullopt;
            if (vol.degree() == 1) {
                if (vol.coeff(1).sign() >= 0) return std::nullopt;
                const Rational r = -vol.coeff(0) / vol.coeff(1);
                if (r > t0 && (!limit || r <= *limit)) return r;
                return std::nullopt;
            }
            const Rational a2 = vol.coeff(2);
            // Convex case: the minimum decides whether the volume touches or
            // dips below zero inside the segment.
            if (a2.sign() > 0) {
                const Rational vertex = -vol.coeff(1) / (Rational(2) * a2);
                if (vertex > t0 && (!limit || vertex <= *limit)) {
                    const int vs = vol.eval(vertex).sign();
                    if (vs == 0) return vertex;
                    if (vs < 0) {
                        // Crosses zero strictly before the vertex.
                        const auto roots = rational_quadratic_roots(vol);
                        if (!roots)
                            throw ZariskiError("irrational pseudoeffective threshold while sweeping " +
                                               curve_name(s, curve));
                        return roots->first;
                    }
                }
                if (limit && vol.eval(*limit).sign() == 0) return *limit;
                if (limit && vol.eval(*limit).sign() < 0) {
                    const auto roots = rational_quadratic_roots(vol);
                    if (!roots)
                        throw ZariskiError("irrational pseudoeffective threshold while sweeping " +
                                           curve_name(s, curve));
                    return roots->first;
                }
                if (!limit) {
                    // No support event ahead: the threshold is the first root.
                    const auto roots = rational_quadratic_roots(vol);
                    if (roots && roots->first > t0) return roots->first;
                    if (roots && roots->second > t0) return roots->second;
                    return std::nullopt;
                }
                return std::nullopt;
            }
            // Concave (or linear-in-disguise) case: positive at t0, so it
            // stays positive until its larger root.
            const auto roots = rational_quadratic_roots(vol);
            if (limit) {
                const int ls = vol.eval(*limit).sign();
                if (ls > 0) return std::nullopt;
                if (!roots)
                    throw ZariskiError("irrational pseudoeffective threshold while sweeping " +
                                       curve_name(s, curve));
                // First root right of t0.
                if (roots->first > t0 && roots->first <= *limit) return roots->first;
                if (roots->second > t0 && roots->second <= *limit) return roots->second;
                return std::nullopt;
            }
            if (!roots)
                throw ZariskiError("irrational pseudoeffective threshold while sweeping " + curve_name(s, curve));
            if (roots->first > t0) return roots->first;
            if (roots->second > t0) return roots->second;
            return std::nullopt;
        };

        const std::optional<Rational> t_vol = volume_root_before(t_event);

        if (t_vol) {
            // Threshold reached: close the family.
            fam.segments.push_back({t0, *t_vol, support, p_coeffs, n_coeffs});
            fam.tau = *t_vol;
            return fam;
        }

        if (!t_event)
            throw ZariskiError("sweep of " + curve_name(s, curve) +
                               " found neither a support event nor a volume root: " +
                               "tracked lattice is too small to close the decomposition");

        // Emit the segment and pivot the support at t_event.
        fam.segments.push_back({t0, *t_event, support, p_coeffs, n_coeffs});

        std::vector<Eigen::Index> next = support;
        for (Eigen::Index j = 0; j < k; ++j) {
            if (std::find(support.begin(), support.end(), j) != support.end()) continue;
            const Poly& f = pair[static_cast<std::size_t>(j)];
            if (f.eval(*t_event).is_zero() && f.coeff(1).sign() < 0) next.push_back(j);
        }
        for (std::size_t i = 0; i < support.size(); ++i) {
            const Poly& xi = n_coeffs[static_cast<std::size_t>(support[i])];
            if (xi.eval(*t_event).is_zero() && xi.coeff(1).sign() < 0)
                next.erase(std::remove(next.begin(), next.end(), support[i]), next.end());
        }
        std::sort(next.begin(), next.end());
        if (next == support)
            throw ZariskiError("support pivot stalled at t = " + t_event->str() + " while sweeping " +
                               curve_name(s, curve));
        if (!is_negative_definite(support_gram(s, next))) {
            std::ostringstream os;
            os << "pivoted support {";
            for (std::size_t i = 0; i < next.size(); ++i) os << (i ? ", " : "") << curve_name(s, next[i]);
            os << "} is not negative definite at t = " << t_event->str();
            throw ZariskiError(os.str());
        }
        support = std::move(next);
        t0 = *t_event;
    }
    throw ZariskiError("family sweep of " + curve_name(s, curve) + " exceeded the pivot budget");
}

Rational pseff_threshold(const LogDelPezzo& s, Eigen::Index curve) {
    return decompose_family(s, curve).tau;
}

} // namespace deltacert
