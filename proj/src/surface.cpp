#include "deltacert/surface.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace deltacert {

Eigen::Index IntersectionLattice::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].name == name) return static_cast<Eigen::Index>(i);
    return -1;
}

DivisorClass IntersectionLattice::basis_vector(Eigen::Index i) const {
    DivisorClass v = DivisorClass::Zero(size());
    v(i) = Rational(1);
    return v;
}

Eigen::Index LogDelPezzo::curve_index(std::string_view curve_name) const {
    return lattice.index_of(curve_name);
}

const PointOnCurve* LogDelPezzo::find_point(std::string_view host, std::string_view point_name) const {
    for (const PointOnCurve& p : points)
        if (p.host == host && p.name == point_name) return &p;
    return nullptr;
}

Rational intersect(const IntersectionLattice& lattice, const DivisorClass& a, const DivisorClass& b) {
    if (a.size() != lattice.size() || b.size() != lattice.size())
        throw ModelError("intersect: divisor dimension does not match the lattice");
    Rational acc(0);
    for (Eigen::Index i = 0; i < lattice.size(); ++i) {
        if (a(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < lattice.size(); ++j) {
            if (b(j).is_zero()) continue;
            acc += a(i) * lattice.gram(i, j) * b(j);
        }
    }
    return acc;
}

std::vector<std::string> validate(const LogDelPezzo& s) {
    std::vector<std::string> problems;
    auto add = [&](const std::string& msg) { problems.push_back(msg); };

    const Eigen::Index k = s.lattice.size();
    if (k == 0) add("lattice has no tracked curves");

    std::set<std::string> names;
    for (const CurveClass& c : s.lattice.curves) {
        if (c.name.empty()) add("curve with empty name");
        if (!names.insert(c.name).second) add("duplicate curve name '" + c.name + "'");
    }

    if (s.lattice.gram.rows() != k || s.lattice.gram.cols() != k) {
        add("gram matrix size does not match the curve count");
        return problems; // everything else would cascade
    }
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = i + 1; j < k; ++j)
            if (s.lattice.gram(i, j) != s.lattice.gram(j, i))
                add("gram matrix not symmetric at (" + s.lattice.curves[static_cast<std::size_t>(i)].name +
                    ", " + s.lattice.curves[static_cast<std::size_t>(j)].name + ")");

    if (s.boundary.size() != k) {
        add("boundary dimension does not match the lattice");
    } else {
        for (Eigen::Index i = 0; i < k; ++i)
            if (s.boundary(i) < Rational(0) || s.boundary(i) >= Rational(1))
                add("boundary coefficient of " + s.lattice.curves[static_cast<std::size_t>(i)].name +
                    " outside [0,1): " + s.boundary(i).str());
    }

    if (s.polarization.size() != k) {
        add("polarization dimension does not match the lattice");
    } else {
        const Rational a2 = intersect(s.lattice, s.polarization, s.polarization);
        if (a2.sign() <= 0) add("polarization has non-positive self-intersection " + a2.str());
        for (Eigen::Index i = 0; i < k; ++i) {
            const Rational ai = intersect(s.lattice, s.polarization, s.lattice.basis_vector(i));
            if (ai.sign() < 0)
                add("polarization negative against " + s.lattice.curves[static_cast<std::size_t>(i)].name +
                    ": " + ai.str());
        }
    }

    std::set<std::pair<std::string, std::string>> point_keys;
    for (const PointOnCurve& p : s.points) {
        const std::string where = "point '" + p.name + "' on '" + p.host + "'";
        if (p.name.empty()) add("point with empty name");
        if (s.lattice.index_of(p.host) < 0) add(where + ": host is not a tracked curve");
        if (!point_keys.insert({p.host, p.name}).second) add("duplicate " + where);
        if (p.sing.r < 1) {
            add(where + ": singularity order r must be >= 1");
        } else {
            if (std::gcd(p.sing.a, p.sing.r) != 1 || std::gcd(p.sing.b, p.sing.r) != 1)
                add(where + ": singularity weights not coprime to r");
        }
        if (p.boundary_local.sign() < 0) add(where + ": negative local boundary multiplicity");
        for (const auto& [curve, order] : p.negative_support) {
            if (s.lattice.index_of(curve) < 0)
                add(where + ": negative_support names unknown curve '" + curve + "'");
            if (curve == p.host)
                add(where + ": negative_support must not include the host curve");
            if (order.sign() < 0)
                add(where + ": negative local order on '" + curve + "'");
        }
    }

    return problems;
}

void require_valid(const LogDelPezzo& s) {
    const auto problems = validate(s);
    if (problems.empty()) return;
    std::ostringstream os;
    os << "surface '" << s.name << "' failed validation:";
    for (const auto& p : problems) os << "\n  - " << p;
    throw ModelError(os.str());
}

} // namespace deltacert
