#include "deltacert/report.hpp"

#include "deltacert/delta.hpp"

#include <json.hpp>

#include <sstream>

namespace deltacert {

namespace {

using nlohmann::ordered_json;

ZariskiSummary summarize_family(const std::string& model, const LogDelPezzo& s, const ZariskiFamily& fam) {
    ZariskiSummary z;
    z.model = model;
    z.curve = s.lattice.curves[static_cast<std::size_t>(fam.curve)].name;
    z.tau = fam.tau;
    z.breakpoints = fam.breakpoints();
    for (const ZariskiSegment& seg : fam.segments) {
        SegmentSummary ss;
        ss.t_lo = seg.t_lo;
        ss.t_hi = seg.t_hi;
        for (Eigen::Index i : seg.support) {
            const std::string& name = s.lattice.curves[static_cast<std::size_t>(i)].name;
            ss.support.push_back(name);
            ss.n_formulas.push_back(name + ": " + seg.n_coeffs[static_cast<std::size_t>(i)].str());
        }
        z.segments.push_back(std::move(ss));
    }
    return z;
}

FlagReport make_flag_report(const std::string& model, const LogDelPezzo& s, const ZariskiFamily& fam,
                            const PointOnCurve& p, const Rational& lambda) {
    const FlagBound fb = local_delta_bound(s, fam, p);
    FlagReport fr;
    fr.model = model;
    fr.curve = p.host;
    fr.point = p.name;
    fr.s_curve = fb.s_curve;
    fr.s_flag = fb.s_flag;
    fr.a_log = fb.a_log;
    fr.delta_bound = fb.bound;
    fr.exceeds_lambda = fb.bound > lambda;
    return fr;
}

ordered_json zariski_to_json(const ZariskiSummary& z) {
    ordered_json jz;
    jz["model"] = z.model;
    jz["curve"] = z.curve;
    jz["tau"] = z.tau.str_frac();
    jz["breakpoints"] = ordered_json::array();
    for (const Rational& b : z.breakpoints) jz["breakpoints"].push_back(b.str_frac());
    jz["segments"] = ordered_json::array();
    for (const SegmentSummary& seg : z.segments) {
        ordered_json js;
        js["from"] = seg.t_lo.str_frac();
        js["to"] = seg.t_hi.str_frac();
        js["support"] = seg.support;
        js["negative_part"] = seg.n_formulas;
        jz["segments"].push_back(std::move(js));
    }
    return jz;
}

} // namespace

CertificationReport certify_one(long n, const Rational& epsilon) {
    const FamilyInstance fam = build_sn(n);
    const SnComputation comp = compute_sn(fam);
    const ClosedForms cf = closed_forms(n);

    CertificationReport r;
    r.n = n;
    r.lambda = cf.lambda;
    r.epsilon = epsilon;
    r.polarization_square = intersect(fam.base.lattice, fam.base.polarization, fam.base.polarization);

    auto check = [&](const std::string& quantity, const Rational& computed, const Rational& expected) {
        r.closed_form_checks.push_back({quantity, computed, expected, computed == expected});
    };
    check("A^2", r.polarization_square, cf.a2);
    check("S(L_xy)", comp.s_l, cf.s_l);
    check("S(R_0)", comp.s_r0, cf.s_ri);
    check("S(R_1)", comp.s_r1, cf.s_ri);
    check("S(R_gamma)", comp.s_r, cf.s_r);
    check("S(W)", comp.s_w, cf.s_w);
    check("S(F)", comp.s_f, cf.s_f);
    check("tau(L_xy)", comp.fam_l.tau, cf.tau_l);
    check("tau(R_0)", comp.fam_r0.tau, cf.tau_ri);
    check("tau(R_1)", comp.fam_r1.tau, cf.tau_ri);
    check("tau(R_gamma)", comp.fam_r.tau, cf.tau_r);
    check("tau(W)", comp.fam_w.tau, cf.tau_w);
    check("tau(F)", comp.fam_f.tau, cf.tau_f);

    const auto& base = fam.base;
    const PointOnCurve* oz = base.find_point("L_xy", "O_z");
    const PointOnCurve* o0 = base.find_point("R_0", "O_0");
    const PointOnCurve* o1 = base.find_point("R_1", "O_1");
    if (!oz || !o0 || !o1) throw ModelError("family builder lost a marked point");
    r.flags.push_back(make_flag_report("base", base, comp.fam_l, *oz, cf.lambda));
    r.flags.push_back(make_flag_report("base", base, comp.fam_r0, *o0, cf.lambda));
    r.flags.push_back(make_flag_report("base", base, comp.fam_r1, *o1, cf.lambda));

    check("S_flag(L_xy; O_z)", r.flags[0].s_flag, cf.sflag_l);
    check("S_flag(R_0; O_0)", r.flags[1].s_flag, cf.sflag_ri);
    check("S_flag(R_1; O_1)", r.flags[2].s_flag, cf.sflag_ri);
    check("A_log(O_z)", r.flags[0].a_log, cf.alog_oz);
    check("A_log(O_0)", r.flags[1].a_log, cf.alog_oi);
    check("A_log(O_1)", r.flags[2].a_log, cf.alog_oi);
    check("delta_bound(O_z)", r.flags[0].delta_bound, cf.delta_oz);
    check("delta_bound(O_0)", r.flags[1].delta_bound, cf.delta_oi);
    check("delta_bound(O_1)", r.flags[2].delta_bound, cf.delta_oi);

    r.zariski.push_back(summarize_family("base", base, comp.fam_l));
    r.zariski.push_back(summarize_family("base", base, comp.fam_r0));
    r.zariski.push_back(summarize_family("base", base, comp.fam_r1));
    r.zariski.push_back(summarize_family("base", base, comp.fam_w));
    r.zariski.push_back(summarize_family("enlarged", fam.enlarged, comp.fam_r));
    r.zariski.push_back(summarize_family("blowup", fam.blowup, comp.fam_f));

    r.ledger = inequality_ledger(fam, comp, epsilon);

    const SmaleType computed = link_type(n);
    const SmaleType expected = classify_smale(2, {{2, n}});
    r.link.genus = genus_branch_curve(n);
    r.link.b2 = computed.b2;
    r.link.torsion = computed.torsion_str;
    r.link.label = computed.label;
    r.link.expected_label = expected.label;
    r.link.match = computed.b2 == expected.b2 && computed.torsion_pairs == expected.torsion_pairs &&
                   computed.label == expected.label && r.link.genus == n;

    r.certified = true;
    auto flag_failure = [&](const std::string& what) {
        if (r.certified) r.first_failure = what;
        r.certified = false;
    };
    for (const QuantityCheck& qc : r.closed_form_checks)
        if (!qc.match)
            flag_failure("closed-form mismatch for " + qc.quantity + ": computed " + qc.computed.str() +
                         ", expected " + qc.expected.str());
    for (const FlagReport& fr : r.flags)
        if (!fr.exceeds_lambda)
            flag_failure("flag (" + fr.curve + ", " + fr.point + ") bound " + fr.delta_bound.str() +
                         " does not exceed lambda = " + cf.lambda.str());
    for (const LedgerEntry& le : r.ledger)
        if (!le.pass)
            flag_failure("ledger entry " + le.id + " fails: " + le.lhs.str() +
                         (le.strict ? " < " : " <= ") + le.rhs.str() + " is false");
    if (!r.link.match)
        flag_failure("link classification " + r.link.label + " does not match expected " +
                     r.link.expected_label);
    return r;
}

std::string report_to_json_line(const CertificationReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["lambda"] = r.lambda.str_frac();
    j["polarization_square"] = r.polarization_square.str_frac();
    j["epsilon"] = r.epsilon.str_frac();

    j["closed_forms"] = ordered_json::array();
    for (const QuantityCheck& qc : r.closed_form_checks) {
        ordered_json jq;
        jq["quantity"] = qc.quantity;
        jq["computed"] = qc.computed.str_frac();
        jq["expected"] = qc.expected.str_frac();
        jq["match"] = qc.match;
        j["closed_forms"].push_back(std::move(jq));
    }

    j["flags"] = ordered_json::array();
    for (const FlagReport& fr : r.flags) {
        ordered_json jf;
        jf["model"] = fr.model;
        jf["curve"] = fr.curve;
        jf["point"] = fr.point;
        jf["s_curve"] = fr.s_curve.str_frac();
        jf["s_flag"] = fr.s_flag.str_frac();
        jf["log_discrepancy"] = fr.a_log.str_frac();
        jf["delta_bound"] = fr.delta_bound.str_frac();
        jf["exceeds_lambda"] = fr.exceeds_lambda;
        j["flags"].push_back(std::move(jf));
    }

    j["zariski"] = ordered_json::array();
    for (const ZariskiSummary& z : r.zariski) j["zariski"].push_back(zariski_to_json(z));

    j["ledger"] = ordered_json::array();
    for (const LedgerEntry& le : r.ledger) {
        ordered_json jl;
        jl["id"] = le.id;
        jl["statement"] = le.statement;
        jl["lhs"] = le.lhs.str_frac();
        jl["rhs"] = le.rhs.str_frac();
        jl["relation"] = le.strict ? "<" : "<=";
        jl["uses_epsilon"] = le.uses_epsilon;
        jl["pass"] = le.pass;
        jl["margin"] = le.margin.str_frac();
        if (le.eps_max) jl["eps_max"] = le.eps_max->str_frac();
        jl["note"] = le.note;
        j["ledger"].push_back(std::move(jl));
    }

    ordered_json jk;
    jk["genus"] = r.link.genus;
    jk["b2"] = r.link.b2;
    jk["torsion"] = r.link.torsion;
    jk["label"] = r.link.label;
    jk["expected_label"] = r.link.expected_label;
    jk["match"] = r.link.match;
    j["link"] = std::move(jk);

    j["verdict"] = r.certified ? "certified" : "failed";
    j["first_failure"] = r.first_failure;
    return j.dump();
}

std::string reports_to_markdown(const std::vector<CertificationReport>& reports) {
    std::ostringstream os;
    os << "# Delta-invariant certification\n\n";
    if (reports.empty()) {
        os << "No family members were processed.\n";
        return os.str();
    }
    os << "Slack parameter: " << reports.front().epsilon.str() << "\n\n";
    os << "| n | lambda | delta(O_z) | delta(O_0) | delta(O_1) | closed forms | ledger | link | verdict |\n";
    os << "|---|--------|------------|------------|------------|--------------|--------|------|---------|\n";
    for (const CertificationReport& r : reports) {
        std::size_t cf_ok = 0;
        for (const QuantityCheck& qc : r.closed_form_checks) cf_ok += qc.match ? 1 : 0;
        std::size_t led_ok = 0;
        for (const LedgerEntry& le : r.ledger) led_ok += le.pass ? 1 : 0;
        std::string d[3] = {"-", "-", "-"};
        for (std::size_t i = 0; i < r.flags.size() && i < 3; ++i) d[i] = r.flags[i].delta_bound.str();
        os << "| " << r.n << " | " << r.lambda.str() << " | " << d[0] << " | " << d[1] << " | " << d[2]
           << " | " << cf_ok << "/" << r.closed_form_checks.size() << " | " << led_ok << "/"
           << r.ledger.size() << " | " << r.link.label << " | "
           << (r.certified ? "certified" : "failed") << " |\n";
    }
    std::size_t failures = 0;
    for (const CertificationReport& r : reports) failures += r.certified ? 0 : 1;
    os << "\n" << (reports.size() - failures) << " of " << reports.size() << " members certified.\n";
    if (failures) {
        os << "\n## Failures\n\n";
        for (const CertificationReport& r : reports)
            if (!r.certified) os << "- n = " << r.n << ": " << r.first_failure << "\n";
    }
    return os.str();
}

std::string markdown_from_json_lines(const std::string& jsonl_text) {
    std::vector<CertificationReport> reports;
    std::istringstream in(jsonl_text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const ordered_json::parse_error& e) {
            throw ModelError("report line " + std::to_string(lineno) + ": " + e.what());
        }
        try {
            CertificationReport r;
            r.n = j.at("n").get<long>();
            r.lambda = Rational::parse(j.at("lambda").get<std::string>());
            r.polarization_square = Rational::parse(j.at("polarization_square").get<std::string>());
            r.epsilon = Rational::parse(j.at("epsilon").get<std::string>());
            for (const auto& jq : j.at("closed_forms")) {
                QuantityCheck qc;
                qc.quantity = jq.at("quantity").get<std::string>();
                qc.computed = Rational::parse(jq.at("computed").get<std::string>());
                qc.expected = Rational::parse(jq.at("expected").get<std::string>());
                qc.match = jq.at("match").get<bool>();
                r.closed_form_checks.push_back(std::move(qc));
            }
            for (const auto& jf : j.at("flags")) {
                FlagReport fr;
                fr.model = jf.at("model").get<std::string>();
                fr.curve = jf.at("curve").get<std::string>();
                fr.point = jf.at("point").get<std::string>();
                fr.s_curve = Rational::parse(jf.at("s_curve").get<std::string>());
                fr.s_flag = Rational::parse(jf.at("s_flag").get<std::string>());
                fr.a_log = Rational::parse(jf.at("log_discrepancy").get<std::string>());
                fr.delta_bound = Rational::parse(jf.at("delta_bound").get<std::string>());
                fr.exceeds_lambda = jf.at("exceeds_lambda").get<bool>();
                r.flags.push_back(std::move(fr));
            }
            for (const auto& jl : j.at("ledger")) {
                LedgerEntry le;
                le.id = jl.at("id").get<std::string>();
                le.pass = jl.at("pass").get<bool>();
                le.lhs = Rational::parse(jl.at("lhs").get<std::string>());
                le.rhs = Rational::parse(jl.at("rhs").get<std::string>());
                le.strict = jl.at("relation").get<std::string>() == "<";
                r.ledger.push_back(std::move(le));
            }
            const auto& jk = j.at("link");
            r.link.genus = jk.at("genus").get<long>();
            r.link.b2 = jk.at("b2").get<long>();
            r.link.torsion = jk.at("torsion").get<std::string>();
            r.link.label = jk.at("label").get<std::string>();
            r.link.expected_label = jk.at("expected_label").get<std::string>();
            r.link.match = jk.at("match").get<bool>();
            r.certified = j.at("verdict").get<std::string>() == "certified";
            r.first_failure = j.at("first_failure").get<std::string>();
            reports.push_back(std::move(r));
        } catch (const ordered_json::exception& e) {
            throw ModelError("report line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return reports_to_markdown(reports);
}

SurfaceReport analyze_surface(const LogDelPezzo& s, const std::vector<std::string>& flag_specs) {
    SurfaceReport r;
    r.name = s.name;
    r.polarization_square = intersect(s.lattice, s.polarization, s.polarization);

    std::vector<ZariskiFamily> fams;
    for (Eigen::Index i = 0; i < s.lattice.size(); ++i) {
        ZariskiFamily fam = decompose_family(s, i);
        r.s_invariants.push_back(
            {"S(" + s.lattice.curves[static_cast<std::size_t>(i)].name + ")", s_invariant(s, fam),
             Rational(0), false});
        r.families.push_back(summarize_family("input", s, fam));
        fams.push_back(std::move(fam));
    }

    for (const std::string& spec : flag_specs) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
            throw ModelError("flag spec '" + spec + "' is not CURVE:POINT");
        const std::string curve = spec.substr(0, colon);
        const std::string point = spec.substr(colon + 1);
        const Eigen::Index ci = s.lattice.index_of(curve);
        if (ci < 0) throw ModelError("flag spec '" + spec + "': unknown curve '" + curve + "'");
        const PointOnCurve* p = s.find_point(curve, point);
        if (!p) throw ModelError("flag spec '" + spec + "': no point '" + point + "' on '" + curve + "'");
        const FlagBound fb = local_delta_bound(s, fams[static_cast<std::size_t>(ci)], *p);
        FlagReport fr;
        fr.model = "input";
        fr.curve = curve;
        fr.point = point;
        fr.s_curve = fb.s_curve;
        fr.s_flag = fb.s_flag;
        fr.a_log = fb.a_log;
        fr.delta_bound = fb.bound;
        fr.exceeds_lambda = false; // no lambda in standalone mode
        r.flags.push_back(std::move(fr));
    }
    return r;
}

std::string surface_report_to_json(const SurfaceReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["polarization_square"] = r.polarization_square.str_frac();
    j["s_invariants"] = ordered_json::array();
    for (const QuantityCheck& qc : r.s_invariants) {
        ordered_json jq;
        jq["quantity"] = qc.quantity;
        jq["value"] = qc.computed.str_frac();
        j["s_invariants"].push_back(std::move(jq));
    }
    j["families"] = ordered_json::array();
    for (const ZariskiSummary& z : r.families) j["families"].push_back(zariski_to_json(z));
    j["flags"] = ordered_json::array();
    for (const FlagReport& fr : r.flags) {
        ordered_json jf;
        jf["curve"] = fr.curve;
        jf["point"] = fr.point;
        jf["s_curve"] = fr.s_curve.str_frac();
        jf["s_flag"] = fr.s_flag.str_frac();
        jf["log_discrepancy"] = fr.a_log.str_frac();
        jf["delta_bound"] = fr.delta_bound.str_frac();
        j["flags"].push_back(std::move(jf));
    }
    return j.dump(2) + "\n";
}

std::string surface_report_to_markdown(const SurfaceReport& r) {
    std::ostringstream os;
    os << "# Surface " << r.name << "\n\n";
    os << "Polarization square: " << r.polarization_square.str() << "\n\n";
    os << "## Expected vanishing orders\n\n| curve | S |\n|-------|---|\n";
    for (const QuantityCheck& qc : r.s_invariants)
        os << "| " << qc.quantity << " | " << qc.computed.str() << " |\n";
    os << "\n## Families\n\n";
    for (const ZariskiSummary& z : r.families) {
        os << "### " << z.curve << "\n\n";
        os << "tau = " << z.tau.str() << "; breakpoints:";
        for (const Rational& b : z.breakpoints) os << " " << b.str();
        os << "\n\n";
        for (const SegmentSummary& seg : z.segments) {
            os << "- [" << seg.t_lo.str() << ", " << seg.t_hi.str() << "]";
            if (seg.n_formulas.empty()) {
                os << " N = 0\n";
            } else {
                os << " N coefficients:";
                for (const std::string& f : seg.n_formulas) os << " {" << f << "}";
                os << "\n";
            }
        }
        os << "\n";
    }
    if (!r.flags.empty()) {
        os << "## Flags\n\n| curve | point | S(curve) | S(flag) | log discrepancy | delta bound |\n";
        os << "|-------|-------|----------|---------|-----------------|-------------|\n";
        for (const FlagReport& fr : r.flags)
            os << "| " << fr.curve << " | " << fr.point << " | " << fr.s_curve.str() << " | "
               << fr.s_flag.str() << " | " << fr.a_log.str() << " | " << fr.delta_bound.str() << " |\n";
    }
    return os.str();
}

} // namespace deltacert
