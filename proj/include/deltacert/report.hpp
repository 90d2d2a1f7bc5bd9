#pragma once

// Certification reports: one exact record per family member combining the
// closed-form cross-checks, the flag bounds, the Zariski family shapes, the
// inequality ledger, and the link classification, plus deterministic JSON
// lines and Markdown rendering.

#include "deltacert/family_sn.hpp"
#include "deltacert/link_topology.hpp"

#include <string>
#include <vector>

namespace deltacert {

struct QuantityCheck {
    std::string quantity;
    Rational computed;
    Rational expected;
    bool match = false;
};

struct FlagReport {
    std::string model;
    std::string curve;
    std::string point;
    Rational s_curve;
    Rational s_flag;
    Rational a_log;
    Rational delta_bound;
    bool exceeds_lambda = false;
};

struct SegmentSummary {
    Rational t_lo, t_hi;
    std::vector<std::string> support;
    std::vector<std::string> n_formulas; // one "curve: poly" line per support curve
};

struct ZariskiSummary {
    std::string model;
    std::string curve;
    Rational tau;
    std::vector<Rational> breakpoints;
    std::vector<SegmentSummary> segments;
};

struct LinkSummary {
    long genus = 0;
    long b2 = 0;
    std::string torsion;
    std::string label;
    std::string expected_label;
    bool match = false;
};

struct CertificationReport {
    long n = 0;
    Rational lambda;
    Rational polarization_square;
    Rational epsilon;
    std::vector<QuantityCheck> closed_form_checks;
    std::vector<FlagReport> flags;
    std::vector<ZariskiSummary> zariski;
    std::vector<LedgerEntry> ledger;
    LinkSummary link;
    bool certified = false;
    std::string first_failure; // empty when certified
};

// Run the whole certification for one family member.
CertificationReport certify_one(long n, const Rational& epsilon);

// One-line JSON encoding (no trailing newline); byte-deterministic.
std::string report_to_json_line(const CertificationReport& r);

// Markdown summary of a batch of reports.
std::string reports_to_markdown(const std::vector<CertificationReport>& reports);

// Markdown summary re-rendered from JSON lines (the `report` subcommand).
std::string markdown_from_json_lines(const std::string& jsonl_text);

// Reports for every curve/flag of a standalone surface (the `surface`
// subcommand): S-invariants, family shapes, and any requested flags.
struct SurfaceReport {
    std::string name;
    Rational polarization_square;
    std::vector<QuantityCheck> s_invariants; // expected unset; match unused
    std::vector<ZariskiSummary> families;
    std::vector<FlagReport> flags;
};

// flag_specs entries are "CURVE:POINT".
SurfaceReport analyze_surface(const LogDelPezzo& surface, const std::vector<std::string>& flag_specs);

std::string surface_report_to_json(const SurfaceReport& r);
std::string surface_report_to_markdown(const SurfaceReport& r);

} // namespace deltacert
