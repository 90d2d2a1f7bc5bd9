#include "deltacert/surface_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace deltacert {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw IoError(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok) fail(path, "unknown field '" + key + "'");
    }
}

const json& field(const json& obj, const std::string& path, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

long get_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<long>();
}

Rational get_rational(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) fail(path, "expected a rational as \"p/q\" (or an integer)");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const RationalError& e) {
        fail(path, e.what());
    }
}

} // namespace

LogDelPezzo surface_from_json(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("surface JSON: ") + e.what());
    }
    if (!root.is_object()) fail("$", "expected a JSON object");
    reject_unknown(root, "$", {"name", "curves", "gram", "boundary", "polarization", "points"});

    LogDelPezzo s;
    s.name = get_string(field(root, "$", "name"), "$.name");

    const json& curves = field(root, "$", "curves");
    if (!curves.is_array() || curves.empty()) fail("$.curves", "expected a nonempty array");
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const std::string path = "$.curves[" + std::to_string(i) + "]";
        const json& c = curves[i];
        if (!c.is_object()) fail(path, "expected an object");
        reject_unknown(c, path, {"name"});
        s.lattice.curves.push_back({get_string(field(c, path, "name"), path + ".name")});
    }
    const auto k = static_cast<Eigen::Index>(s.lattice.curves.size());

    const json& gram = field(root, "$", "gram");
    if (!gram.is_array() || gram.size() != s.lattice.curves.size())
        fail("$.gram", "expected " + std::to_string(s.lattice.curves.size()) + " rows");
    s.lattice.gram = RMatrix(k, k);
    for (std::size_t i = 0; i < gram.size(); ++i) {
        const std::string rpath = "$.gram[" + std::to_string(i) + "]";
        if (!gram[i].is_array() || gram[i].size() != s.lattice.curves.size())
            fail(rpath, "expected " + std::to_string(s.lattice.curves.size()) + " entries");
        for (std::size_t j = 0; j < gram[i].size(); ++j)
            s.lattice.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                get_rational(gram[i][j], rpath + "[" + std::to_string(j) + "]");
    }

    auto read_divisor = [&](const char* key) {
        const json& obj = field(root, "$", key);
        const std::string path = std::string("$.") + key;
        if (!obj.is_object()) fail(path, "expected an object mapping curve names to rationals");
        DivisorClass d = DivisorClass::Zero(k);
        for (const auto& [curve, value] : obj.items()) {
            const Eigen::Index idx = s.lattice.index_of(curve);
            if (idx < 0) fail(path, "unknown curve '" + curve + "'");
            d(idx) = get_rational(value, path + "." + curve);
        }
        return d;
    };
    s.boundary = read_divisor("boundary");
    s.polarization = read_divisor("polarization");

    const json& points = field(root, "$", "points");
    if (!points.is_array()) fail("$.points", "expected an array");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string path = "$.points[" + std::to_string(i) + "]";
        const json& p = points[i];
        if (!p.is_object()) fail(path, "expected an object");
        reject_unknown(p, path, {"name", "host", "sing", "boundary_local", "negative_support"});
        PointOnCurve pt;
        pt.name = get_string(field(p, path, "name"), path + ".name");
        pt.host = get_string(field(p, path, "host"), path + ".host");
        const json& sing = field(p, path, "sing");
        const std::string spath = path + ".sing";
        if (!sing.is_object()) fail(spath, "expected an object");
        reject_unknown(sing, spath, {"r", "a", "b"});
        pt.sing.r = get_integer(field(sing, spath, "r"), spath + ".r");
        pt.sing.a = get_integer(field(sing, spath, "a"), spath + ".a");
        pt.sing.b = get_integer(field(sing, spath, "b"), spath + ".b");
        pt.boundary_local = get_rational(field(p, path, "boundary_local"), path + ".boundary_local");
        const json& ns = field(p, path, "negative_support");
        const std::string npath = path + ".negative_support";
        if (!ns.is_object()) fail(npath, "expected an object mapping curve names to local orders");
        for (const auto& [curve, value] : ns.items())
            pt.negative_support[curve] = get_rational(value, npath + "." + curve);
        s.points.push_back(std::move(pt));
    }

    require_valid(s);
    return s;
}

std::string surface_to_json(const LogDelPezzo& s) {
    ordered_json root;
    root["name"] = s.name;
    root["curves"] = ordered_json::array();
    for (const CurveClass& c : s.lattice.curves) root["curves"].push_back({{"name", c.name}});
    root["gram"] = ordered_json::array();
    for (Eigen::Index i = 0; i < s.lattice.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < s.lattice.size(); ++j) row.push_back(s.lattice.gram(i, j).str_frac());
        root["gram"].push_back(std::move(row));
    }
    auto write_divisor = [&](const DivisorClass& d) {
        ordered_json obj = ordered_json::object();
        for (Eigen::Index i = 0; i < s.lattice.size(); ++i)
            if (!d(i).is_zero()) obj[s.lattice.curves[static_cast<std::size_t>(i)].name] = d(i).str_frac();
        return obj;
    };
    root["boundary"] = write_divisor(s.boundary);
    root["polarization"] = write_divisor(s.polarization);
    root["points"] = ordered_json::array();
    for (const PointOnCurve& p : s.points) {
        ordered_json pt;
        pt["name"] = p.name;
        pt["host"] = p.host;
        pt["sing"] = {{"r", p.sing.r}, {"a", p.sing.a}, {"b", p.sing.b}};
        pt["boundary_local"] = p.boundary_local.str_frac();
        ordered_json ns = ordered_json::object();
        for (const auto& [curve, order] : p.negative_support) ns[curve] = order.str_frac();
        pt["negative_support"] = std::move(ns);
        root["points"].push_back(std::move(pt));
    }
    return root.dump(2) + "\n";
}

LogDelPezzo load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open surface file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return surface_from_json(buf.str());
}

void save_surface(const LogDelPezzo& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write surface file '" + path + "'");
    out << surface_to_json(s);
    if (!out) throw IoError("failed writing surface file '" + path + "'");
}

} // namespace deltacert
