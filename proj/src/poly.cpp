#include "deltacert/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace deltacert {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rational> a(c_.size() + 1);
    a[0] = Rational(0);
    for (std::size_t k = 0; k < c_.size(); ++k)
        a[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    return Poly(std::move(a));
}

Rational Poly::integral(const Rational& lo, const Rational& hi) const {
    const Poly F = antiderivative();
    return F.eval(hi) - F.eval(lo);
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator-(const Poly& a) {
    std::vector<Rational> c(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = -a.c_[k];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, Poly p) {
    for (auto& ck : p.c_) ck *= s;
    p.trim();
    return p;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Rational a = c_[k];
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        const bool unit = (a == Rational(1)) && k > 0;
        if (!unit) os << a.str();
        if (k >= 1) {
            if (!unit) os << "*";
            os << var;
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breaks, std::vector<Poly> pieces, bool zero_tail)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)), zero_tail_(zero_tail) {
    if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size())
        throw PolyError("piecewise polynomial needs k pieces and k+1 breakpoints");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw PolyError("piecewise breakpoints must be strictly increasing");
    for (const Poly& p : pieces_) {
        (void)p;
        // Volume-type data never exceeds degree 4; higher degrees signal a
        // modeling bug upstream, so fail loudly in debug builds.
        assert(p.degree() <= 4 && "piecewise piece of unexpectedly high degree");
    }
}

Rational PiecewisePoly::eval(const Rational& t) const {
    if (t < breaks_.front()) throw PolyError("piecewise eval left of domain");
    if (t > breaks_.back()) {
        if (zero_tail_) return Rational(0);
        throw PolyError("piecewise eval right of domain");
    }
    // Last interval owns its right endpoint; interior breakpoints resolve to
    // the left piece (continuity makes the choice immaterial).
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (t <= breaks_[i + 1]) return pieces_[i].eval(t);
    return pieces_.back().eval(t);
}

Rational PiecewisePoly::integrate(const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw PolyError("piecewise integrate with lo > hi");
    if (lo < breaks_.front()) throw PolyError("piecewise integrate left of domain");
    if (hi > breaks_.back() && !zero_tail_) throw PolyError("piecewise integrate right of domain");
    const Rational hi_eff = min(hi, breaks_.back());
    Rational acc(0);
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        const Rational a = max(lo, breaks_[i]);
        const Rational b = min(hi_eff, breaks_[i + 1]);
        if (a < b) acc += pieces_[i].integral(a, b);
    }
    return acc;
}

bool PiecewisePoly::is_continuous() const {
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i].eval(breaks_[i + 1]) != pieces_[i + 1].eval(breaks_[i + 1])) return false;
    if (zero_tail_ && !pieces_.back().eval(breaks_.back()).is_zero()) return false;
    return true;
}

namespace {

// Sign changes in the Sturm sequence of p at x (zeros skipped).
int sturm_sign_changes(const std::vector<Poly>& sturm, const Rational& x) {
    int changes = 0, prev = 0;
    for (const Poly& q : sturm) {
        const int s = q.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero() && seq.back().degree() >= 1) {
        // Remainder of seq[k-1] by seq[k], negated.
        Poly a = seq[seq.size() - 2];
        const Poly& b = seq.back();
        const int db = b.degree();
        const Rational lead_b = b.coeff(db);
        while (!a.is_zero() && a.degree() >= db) {
            const int da = a.degree();
            const Rational q = a.coeff(da) / lead_b;
            std::vector<Rational> shift(static_cast<std::size_t>(da - db) + 1, Rational(0));
            shift.back() = q;
            a -= Poly(std::move(shift)) * b;
        }
        if (a.is_zero()) break;
        seq.push_back(-a);
    }
    return seq;
}

// Number of distinct real roots of squarefree p in (lo, hi].
int sturm_count(const std::vector<Poly>& sturm, const Rational& lo, const Rational& hi) {
    return sturm_sign_changes(sturm, lo) - sturm_sign_changes(sturm, hi);
}

mpz_class isqrt_exact(const mpz_class& n, bool& exact) {
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    exact = (rem == 0);
    return root;
}

// Exhaustive rational-root extraction (Gauss lemma candidates) with
// deflation; returns the deflated polynomial.
Poly extract_rational_roots(Poly p, std::vector<Rational>& roots) {
    // Integerize: multiply by the lcm of coefficient denominators.
    mpz_class den_lcm(1);
    for (const Rational& c : p.coeffs())
        if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Rational> ic;
    ic.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) ic.push_back(c * Rational(den_lcm, mpz_class(1)));
    Poly q(std::move(ic));

    // Pull out t = 0 roots first.
    while (!q.is_zero() && q.coeff(0).is_zero()) {
        roots.push_back(Rational(0));
        std::vector<Rational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = Poly(std::move(shifted));
    }
    if (q.degree() < 1) return q;

    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> divs;
        mpz_class a = abs(n);
        for (mpz_class d(1); d * d <= a; ++d) {
            if (a % d == 0) {
                divs.push_back(d);
                if (d * d != a) divs.push_back(a / d);
            }
        }
        return divs;
    };
    const auto p0_divs = divisors(q.coeff(0).numerator());
    const auto pk_divs = divisors(q.coeff(q.degree()).numerator());
    for (const mpz_class& r : p0_divs) {
        for (const mpz_class& s : pk_divs) {
            for (int sign : {1, -1}) {
                const Rational cand(sign > 0 ? r : mpz_class(-r), s);
                while (q.degree() >= 1 && q.eval(cand).is_zero()) {
                    roots.push_back(cand);
                    // Synthetic division by (t - cand).
                    std::vector<Rational> out(static_cast<std::size_t>(q.degree()), Rational(0));
                    Rational carry(0);
                    for (int k = q.degree(); k >= 1; --k) {
                        carry = q.coeff(k) + carry * cand;
                        out[static_cast<std::size_t>(k - 1)] = carry;
                    }
                    q = Poly(std::move(out));
                }
            }
        }
    }
    return q;
}

} // namespace

RootReport roots_in_interval(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw PolyError("roots_in_interval of the zero polynomial");
    if (lo > hi) throw PolyError("roots_in_interval with lo > hi");
    RootReport out;
    const int deg = p.degree();
    if (deg == 0) return out;

    auto keep = [&](const Rational& r) { return lo <= r && r <= hi; };

    if (deg == 1) {
        const Rational r = -p.coeff(0) / p.coeff(1);
        if (keep(r)) out.rational_roots.push_back(r);
        return out;
    }
    if (deg == 2) {
        const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        const Rational disc = b * b - Rational(4) * a * c;
        if (disc.sign() < 0) return out;
        if (disc.sign() == 0) {
            const Rational r = -b / (Rational(2) * a);
            if (keep(r)) out.rational_roots.push_back(r);
            return out;
        }
        bool num_sq = false, den_sq = false;
        const mpz_class sn = isqrt_exact(disc.numerator(), num_sq);
        const mpz_class sd = isqrt_exact(disc.denominator(), den_sq);
        if (num_sq && den_sq) {
            const Rational s(sn, sd);
            Rational r1 = (-b - s) / (Rational(2) * a);
            Rational r2 = (-b + s) / (Rational(2) * a);
            if (r2 < r1) std::swap(r1, r2);
            if (keep(r1)) out.rational_roots.push_back(r1);
            if (keep(r2)) out.rational_roots.push_back(r2);
            return out;
        }
        // Irrational pair: fall through to Sturm isolation below.
    }

    // General path: strip rational roots, then isolate the rest with Sturm.
    std::vector<Rational> rroots;
    Poly rem = extract_rational_roots(p, rroots);
    std::sort(rroots.begin(), rroots.end());
    rroots.erase(std::unique(rroots.begin(), rroots.end()), rroots.end());
    for (const Rational& r : rroots)
        if (keep(r)) out.rational_roots.push_back(r);

    if (rem.degree() < 1) return out;

    // rem has no rational roots; make it squarefree enough for Sturm by
    // using the sequence on rem directly (repeated irrational roots do not
    // occur in this engine's degree range, and Sturm tolerates them by
    // counting distinct roots).
    const auto sturm = sturm_sequence(rem);

    // Work on (lo', hi] with lo' slightly left of lo so a root exactly at lo
    // is counted; rem(lo) = 0 cannot happen for rational lo (no rational
    // roots remain), so (lo, hi] already includes everything in [lo, hi].
    struct Span { Rational a, b; int count; };
    std::vector<Span> work;
    const int total = sturm_count(sturm, lo, hi);
    if (total > 0) work.push_back({lo, hi, total});
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        if (s.count == 1) {
            // Tighten the bracket so callers get a usable location, not just
            // existence; endpoints stay clean since rem has no rational zeros.
            Rational a = s.a, b = s.b;
            const Rational width_cap(1, 64);
            while (b - a > width_cap) {
                const Rational mid = (a + b) / Rational(2);
                if (sturm_count(sturm, a, mid) == 1)
                    b = mid;
                else
                    a = mid;
            }
            out.isolating_intervals.emplace_back(a, b);
            continue;
        }
        const Rational mid = (s.a + s.b) / Rational(2);
        const int left = sturm_count(sturm, s.a, mid);
        const int right = s.count - left;
        if (left > 0) work.push_back({s.a, mid, left});
        if (right > 0) work.push_back({mid, s.b, right});
    }
    std::sort(out.isolating_intervals.begin(), out.isolating_intervals.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

} // namespace deltacert
