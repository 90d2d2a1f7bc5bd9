#include "deltacert/link_topology.hpp"

#include "deltacert/rational.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace deltacert {

namespace {

std::string unicode_digits(long v, const char* const table[10]) {
    std::string out;
    for (const char c : std::to_string(v)) {
        if (c == '-') { out += "⁻"; continue; } // never hit for our inputs
        out += table[c - '0'];
    }
    return out;
}

std::string superscript(long v) {
    static const char* const sup[10] = {"⁰", "¹", "²", "³", "⁴",
                                        "⁵", "⁶", "⁷", "⁸", "⁹"};
    return unicode_digits(v, sup);
}

std::string subscript(long v) {
    static const char* const sub[10] = {"₀", "₁", "₂", "₃", "₄",
                                        "₅", "₆", "₇", "₈", "₉"};
    return unicode_digits(v, sub);
}

} // namespace

MonodromyDivisor monodromy_divisor(const std::vector<long>& weights, long degree) {
    const std::size_t k = weights.size();
    if (k == 0 || k > 16) throw LinkError("monodromy divisor needs between 1 and 16 weights");
    if (degree <= 0) throw LinkError("monodromy divisor needs a positive degree");
    for (long a : weights)
        if (a <= 0 || a >= degree) throw LinkError("weights must satisfy 0 < a_i < degree");

    // w_i = degree / a_i = u_i / v_i in lowest terms.
    std::vector<long> u(k), v(k);
    for (std::size_t i = 0; i < k; ++i) {
        const long g = std::gcd(degree, weights[i]);
        u[i] = degree / g;
        v[i] = weights[i] / g;
    }

    // Expand prod_i (Lambda_{u_i}/v_i - 1) using Lambda_a Lambda_b =
    // gcd(a,b) Lambda_{lcm(a,b)}: the subset S contributes
    // (-1)^{k-|S|} (prod_{i in S} w_i) / lcm_S on Lambda_{lcm_S}.
    std::map<long, Rational> acc;
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        long l = 1;
        Rational coeff(1);
        int bits = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask & (1ul << i))) continue;
            ++bits;
            l = std::lcm(l, u[i]);
            coeff *= Rational(u[i], v[i]);
        }
        coeff /= Rational(l);
        if ((k - static_cast<std::size_t>(bits)) % 2 == 1) coeff = -coeff;
        acc[l] += coeff;
    }

    MonodromyDivisor d;
    for (const auto& [m, c] : acc) {
        if (c.is_zero()) continue;
        if (!c.is_integer())
            throw LinkError("monodromy divisor has non-integral coefficient " + c.str() +
                            " on index " + std::to_string(m));
        d.mult[m] = c.numerator().get_si();
    }

    // Milnor number mu = prod (w_i - 1), certified integral, must equal the
    // total degree sum m * c_m.
    Rational mu(1);
    for (std::size_t i = 0; i < k; ++i) mu *= Rational(u[i] - v[i], v[i]);
    if (!mu.is_integer()) throw LinkError("Milnor number " + mu.str() + " is not an integer");
    long degree_sum = 0;
    for (const auto& [m, c] : d.mult) degree_sum += m * c;
    if (Rational(degree_sum) != mu)
        throw LinkError("monodromy divisor degree " + std::to_string(degree_sum) +
                        " does not match the Milnor number " + mu.str());
    d.milnor_number = mu.numerator().get_si();

    // Eigenvalue multiplicities e_j = sum_{j | m} c_m must be nonnegative
    // for every potential order j.
    std::set<long> orders;
    for (const auto& [m, c] : d.mult) {
        (void)c;
        for (long j = 1; j * j <= m; ++j) {
            if (m % j) continue;
            orders.insert(j);
            orders.insert(m / j);
        }
    }
    for (long j : orders) {
        long e = 0;
        for (const auto& [m, c] : d.mult)
            if (m % j == 0) e += c;
        if (e < 0)
            throw LinkError("negative eigenvalue multiplicity " + std::to_string(e) + " at order " +
                            std::to_string(j));
    }
    return d;
}

long eigenvalue_one_multiplicity(const MonodromyDivisor& d) {
    long s = 0;
    for (const auto& [m, c] : d.mult) {
        (void)m;
        s += c;
    }
    return s;
}

long count_weighted_monomials(const std::vector<long>& weights, long degree) {
    if (weights.empty()) return degree == 0 ? 1 : 0;
    if (degree < 0) return 0;
    // Small dimension, small degrees: direct recursion is plenty.
    const long a = weights.back();
    std::vector<long> rest(weights.begin(), weights.end() - 1);
    long total = 0;
    for (long k = 0; k * a <= degree; ++k) total += count_weighted_monomials(rest, degree - k * a);
    return total;
}

long b2_link(long n) {
    if (n < 1) throw LinkError("the link family needs n >= 1");
    const MonodromyDivisor d = monodromy_divisor({2, 4, 4 * n, 4 * n + 1}, 8 * n + 4);
    return eigenvalue_one_multiplicity(d);
}

long genus_branch_curve(long n) {
    if (n < 1) throw LinkError("the branch curve needs n >= 1");
    // Weighted plane curve of degree 4n+2 in P(1, 2, 2n): the genus counts
    // monomials of degree (4n+2) - (1 + 2 + 2n) = 2n - 1.
    return count_weighted_monomials({1, 2, 2 * n}, 2 * n - 1);
}

std::map<long, long> torsion_h2(long n) {
    if (n < 1) throw LinkError("the link family needs n >= 1");
    // Degree-2 cyclic branched cover over a genus-g curve contributes
    // (Z/2 + Z/2)^g.
    return {{2, genus_branch_curve(n)}};
}

SmaleType classify_smale(long b2, const std::map<long, long>& torsion_pairs) {
    if (b2 < 0) throw LinkError("negative b2");
    for (const auto& [m, k] : torsion_pairs)
        if (m < 2 || k < 1) throw LinkError("torsion pairs need m >= 2 and multiplicity >= 1");

    SmaleType t;
    t.b2 = b2;
    t.torsion_pairs = torsion_pairs;

    if (torsion_pairs.empty()) {
        t.torsion_str = "0";
    } else {
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, k] : torsion_pairs) {
            if (!first) os << " ⊕ ";
            os << "(Z/" << m << "⊕Z/" << m << ")";
            if (k > 1) os << superscript(k);
            first = false;
        }
        t.torsion_str = os.str();
    }

    std::vector<std::string> parts;
    if (b2 > 0) {
        std::string p;
        if (b2 > 1) p += std::to_string(b2);
        p += "M∞";
        parts.push_back(p);
    }
    for (const auto& [m, k] : torsion_pairs) {
        std::string p;
        if (k > 1) p += std::to_string(k) + " ";
        p += "M" + subscript(m);
        parts.push_back(p);
    }
    if (parts.empty()) {
        t.label = "S⁵";
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " # " : "") << parts[i];
        t.label = os.str();
    }
    return t;
}

SmaleType link_type(long n) {
    return classify_smale(b2_link(n), torsion_h2(n));
}

} // namespace deltacert
