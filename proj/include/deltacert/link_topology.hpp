#pragma once

// Topology of the links: second Betti number via the weighted-homogeneous
// monodromy divisor, torsion via the branched-cover genus, and the resulting
// connected-sum label in the simply-connected spin classification.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltacert {

class LinkError : public std::runtime_error {
public:
    explicit LinkError(const std::string& what) : std::runtime_error(what) {}
};

// Monodromy divisor sum c_m * Lambda_m of a quasi-smooth hypersurface
// singularity with the given weights and degree.  Coefficients are certified
// integral; the cyclotomic multiplicities it induces are certified
// nonnegative and of total degree equal to the Milnor number.
struct MonodromyDivisor {
    std::map<long, long> mult; // m -> c_m
    long milnor_number = 0;
};

MonodromyDivisor monodromy_divisor(const std::vector<long>& weights, long degree);

// Multiplicity of eigenvalue 1, i.e. the sum of all c_m.
long eigenvalue_one_multiplicity(const MonodromyDivisor& d);

// Number of weighted monomials of the given degree: x^a with a.weights = degree.
long count_weighted_monomials(const std::vector<long>& weights, long degree);

// b2 of the link of the n-th family member (threefold weights 2, 4, 4n, 4n+1
// of degree 8n+4); n >= 1.
long b2_link(long n);

// Genus of the branch curve of the degree-2 cover: a weighted plane curve of
// degree 4n+2 in P(1, 2, 2n); equals n.
long genus_branch_curve(long n);

// Torsion of H_2 of the link as pairs: m -> k means (Z/m + Z/m)^k.
std::map<long, long> torsion_h2(long n);

struct SmaleType {
    long b2 = 0;
    std::map<long, long> torsion_pairs;
    std::string torsion_str; // e.g. "(Z/2⊕Z/2)²", "0" when trivial
    std::string label;       // e.g. "2M∞ # 2 M₂", "S⁵" when trivial
};

// Assemble the connected-sum label from b2 and the torsion pairs.
SmaleType classify_smale(long b2, const std::map<long, long>& torsion_pairs);

// Full invariant set for the n-th family member.
SmaleType link_type(long n);

} // namespace deltacert
