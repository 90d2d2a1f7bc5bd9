#pragma once

// Univariate polynomials and piecewise polynomials over Rational, with exact
// evaluation and integration.  Everything a volume function needs, nothing
// more: the engine only ever produces low degrees (an assertion guards that).

#include "deltacert/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace deltacert {

class PolyError : public std::runtime_error {
public:
    explicit PolyError(const std::string& what) : std::runtime_error(what) {}
};

// Coefficients in increasing degree order; trailing zeros trimmed, so the
// zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const Rational& constant) : c_{constant} { trim(); }

    static Poly zero() { return Poly(); }
    // a + b t
    static Poly affine(const Rational& a, const Rational& b) { return Poly{a, b}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }

    Rational eval(const Rational& t) const;

    Poly derivative() const;
    // Antiderivative with zero constant term.
    Poly antiderivative() const;
    Rational integral(const Rational& lo, const Rational& hi) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, Poly p);
    friend Poly operator*(Poly p, const Rational& s) { return s * std::move(p); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// A continuous piecewise polynomial on [breaks.front(), breaks.back()],
// with pieces[i] governing [breaks[i], breaks[i+1]].  With zero_tail set the
// function is extended by zero to the right of the domain (volume functions
// vanish beyond the pseudoeffective threshold).
class PiecewisePoly {
public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<Rational> breaks, std::vector<Poly> pieces, bool zero_tail);

    const std::vector<Rational>& breaks() const { return breaks_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    bool zero_tail() const { return zero_tail_; }
    Rational domain_lo() const { return breaks_.front(); }
    Rational domain_hi() const { return breaks_.back(); }

    Rational eval(const Rational& t) const;
    // Exact definite integral via per-piece antiderivatives; [lo, hi] must
    // lie in the domain (or its zero-tail extension) and satisfy lo <= hi.
    Rational integrate(const Rational& lo, const Rational& hi) const;

    // True when adjacent pieces agree at the interior breakpoints (and, with
    // zero_tail, the last piece vanishes at the right endpoint).
    bool is_continuous() const;

private:
    std::vector<Rational> breaks_;
    std::vector<Poly> pieces_;
    bool zero_tail_ = false;
};

// Exact real-root location for polynomials over Q.  Rational roots are
// returned exactly; irrational ones as disjoint isolating intervals with
// rational endpoints (one root strictly inside each, endpoints not roots).
struct RootReport {
    std::vector<Rational> rational_roots;
    std::vector<std::pair<Rational, Rational>> isolating_intervals;
};

RootReport roots_in_interval(const Poly& p, const Rational& lo, const Rational& hi);

} // namespace deltacert
