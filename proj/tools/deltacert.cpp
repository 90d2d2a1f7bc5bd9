// deltacert: exact certification of delta-invariant bounds for the S_n family,
// Zariski decompositions of user-supplied models, and link invariants.
#include "deltacert/family_sn.hpp"
#include "deltacert/link_topology.hpp"
#include "deltacert/report.hpp"
#include "deltacert/surface_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

namespace {

using namespace deltacert;

constexpr int kExitCertified = 0;
constexpr int kExitFailures = 1;
constexpr int kExitConfig = 2;

struct RangeSpec {
    long lo = 2;
    long hi = 1000;
};

RangeSpec parse_range(const std::string& text) {
    RangeSpec r;
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            r.lo = std::stol(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            r.hi = r.lo;
        } else {
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            r.lo = std::stol(a, &used);
            if (used != a.size()) throw std::invalid_argument(a);
            r.hi = std::stol(b, &used);
            if (used != b.size()) throw std::invalid_argument(b);
        }
    } catch (const std::exception&) {
        throw IoError("range '" + text + "' is not N or A..B");
    }
    return r;
}

std::string sibling_markdown_path(const std::string& path) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ".md";
    return path.substr(0, dot) + ".md";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed while writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_certify(const std::string& range_text, const std::string& epsilon_text, unsigned jobs,
                const std::string& out_path, const std::string& format) {
    RangeSpec range = parse_range(range_text);
    if (const char* cap_text = std::getenv("DELTACERT_MAX_N")) {
        char* end = nullptr;
        const long cap = std::strtol(cap_text, &end, 10);
        if (end && *end == '\0' && cap > 0 && range.hi > cap) {
            std::cerr << "warning: DELTACERT_MAX_N=" << cap << " clamps the upper bound from "
                      << range.hi << "\n";
            range.hi = cap;
        }
    }
    if (range.lo > range.hi) throw IoError("empty range: " + std::to_string(range.lo) + ".." +
                                           std::to_string(range.hi));
    if (range.lo < 2)
        throw IoError("the certified family starts at n = 2; n = 1 is covered by the classical "
                      "classification and is available via the 'link' subcommand");
    const Rational epsilon = Rational::parse(epsilon_text);

    std::vector<long> ns;
    for (long n = range.lo; n <= range.hi; ++n) ns.push_back(n);
    std::vector<CertificationReport> reports(ns.size());
    std::vector<std::exception_ptr> errors(ns.size());

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(ns.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            try {
                reports[i] = certify_one(ns[i], epsilon);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= ns.size()) return;
                try {
                    reports[i] = certify_one(ns[i], epsilon);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    std::string jsonl;
    for (const CertificationReport& r : reports) jsonl += report_to_json_line(r) + "\n";
    const std::string markdown = reports_to_markdown(reports);

    std::size_t failures = 0;
    for (const CertificationReport& r : reports) failures += r.certified ? 0 : 1;

    if (!out_path.empty()) {
        write_file(out_path, jsonl);
        const std::string md_path = sibling_markdown_path(out_path);
        write_file(md_path, markdown);
        std::cout << (reports.size() - failures) << " of " << reports.size()
                  << " members certified; reports written to " << out_path << " and " << md_path
                  << "\n";
    } else if (format == "json") {
        std::cout << jsonl;
    } else {
        std::cout << markdown;
    }
    return failures == 0 ? kExitCertified : kExitFailures;
}

int run_surface(const std::string& in_path, long emit_n, const std::string& out_path,
                const std::vector<std::string>& flag_specs, const std::string& format) {
    if (emit_n > 0) {
        const FamilyInstance fam = build_sn(emit_n);
        const std::string text = surface_to_json(fam.base);
        if (out_path.empty())
            std::cout << text;
        else
            write_file(out_path, text);
        return kExitCertified;
    }
    const LogDelPezzo s = load_surface(in_path);
    const SurfaceReport r = analyze_surface(s, flag_specs);
    const std::string text = format == "json" ? surface_report_to_json(r) : surface_report_to_markdown(r);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitCertified;
}

int run_link(long n, const std::string& format) {
    const SmaleType t = link_type(n);
    const long genus = genus_branch_curve(n);
    std::string note;
    if (n == 1)
        note = "n = 1 lies outside the certified range of the delta bound; the link invariants "
               "are reported for reference";
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["genus"] = genus;
        j["b2"] = t.b2;
        j["torsion"] = t.torsion_str;
        j["label"] = t.label;
        if (!note.empty()) j["note"] = note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "# Link of the degree-" << (8 * n + 4) << " hypersurface with weights (2, 4, "
                  << 4 * n << ", " << 4 * n + 1 << ")\n\n";
        std::cout << "- branch curve genus: " << genus << "\n";
        std::cout << "- b2: " << t.b2 << "\n";
        std::cout << "- H2 torsion: " << t.torsion_str << "\n";
        std::cout << "- diffeomorphism type: " << t.label << "\n";
        if (!note.empty()) std::cout << "\n" << note << "\n";
    }
    return kExitCertified;
}

int run_report(const std::string& in_path, const std::string& out_path) {
    const std::string markdown = markdown_from_json_lines(read_file(in_path));
    if (out_path.empty())
        std::cout << markdown;
    else
        write_file(out_path, markdown);
    return kExitCertified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic certification of delta-invariant bounds and link invariants"};
    app.require_subcommand(1);

    std::string range_text = "2..1000";
    std::string epsilon_text = "1/1000000";
    unsigned jobs = 1;
    std::string certify_out;
    std::string certify_format = "md";
    CLI::App* certify = app.add_subcommand("certify", "Certify the delta bound over a range of n");
    certify->add_option("--n", range_text, "Single n or inclusive range A..B")->capture_default_str();
    certify->add_option("--epsilon", epsilon_text, "Non-negative rational slack p/q")
        ->capture_default_str();
    certify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    certify->add_option("--out", certify_out, "Write JSONL here plus a Markdown sibling");
    certify->add_option("--format", certify_format, "Stdout format when --out is absent")
        ->check(CLI::IsMember({"json", "md"}))
        ->capture_default_str();

    std::string surface_in;
    long emit_n = 0;
    std::string surface_out;
    std::vector<std::string> flag_specs;
    std::string surface_format = "md";
    CLI::App* surface = app.add_subcommand("surface", "Analyze a surface model from JSON");
    CLI::Option* opt_in = surface->add_option("--in", surface_in, "Surface model JSON file");
    CLI::Option* opt_emit =
        surface->add_option("--emit-sn", emit_n, "Emit the base model for this n as JSON and exit");
    opt_in->excludes(opt_emit);
    opt_emit->excludes(opt_in);
    surface->add_option("--flag", flag_specs, "Flag CURVE:POINT to bound delta at (repeatable)");
    surface->add_option("--out", surface_out, "Output file (default stdout)");
    surface->add_option("--format", surface_format, "Report format")
        ->check(CLI::IsMember({"json", "md"}))
        ->capture_default_str();

    long link_n = 0;
    std::string link_format = "md";
    CLI::App* link = app.add_subcommand("link", "Topological invariants of the link for a given n");
    link->add_option("--n", link_n, "Member index n >= 1")->required()->check(CLI::PositiveNumber);
    link->add_option("--format", link_format, "Output format")
        ->check(CLI::IsMember({"json", "md"}))
        ->capture_default_str();

    std::string report_in;
    std::string report_out;
    CLI::App* report = app.add_subcommand("report", "Render a certification JSONL file as Markdown");
    report->add_option("--in", report_in, "JSONL file produced by certify --out")->required();
    report->add_option("--out", report_out, "Markdown output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (certify->parsed()) return run_certify(range_text, epsilon_text, jobs, certify_out, certify_format);
        if (surface->parsed()) {
            if (surface_in.empty() && emit_n <= 0)
                throw IoError("surface requires --in FILE or --emit-sn N");
            return run_surface(surface_in, emit_n, surface_out, flag_specs, surface_format);
        }
        if (link->parsed()) return run_link(link_n, link_format);
        if (report->parsed()) return run_report(report_in, report_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
