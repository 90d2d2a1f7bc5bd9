#include "deltacert/family_sn.hpp"
#include "deltacert/report.hpp"
#include "deltacert/surface_io.hpp"

#include <doctest.h>

using namespace deltacert;

TEST_CASE("surface JSON round trip is byte identical") {
    for (long n : {2L, 3L, 9L}) {
        const FamilyInstance fam = build_sn(n);
        for (const LogDelPezzo* s : {&fam.base, &fam.enlarged, &fam.blowup}) {
            const std::string text = surface_to_json(*s);
            const LogDelPezzo back = surface_from_json(text);
            CHECK(surface_to_json(back) == text);
            CHECK(back.name == s->name);
            CHECK(back.lattice.size() == s->lattice.size());
            CHECK(back.points.size() == s->points.size());
            CHECK(intersect(back.lattice, back.polarization, back.polarization) ==
                  intersect(s->lattice, s->polarization, s->polarization));
        }
    }
}

TEST_CASE("rationals in JSON accept integers and p/q strings") {
    const std::string text = R"({
      "name": "toy",
      "curves": [{"name": "C"}],
      "gram": [[2]],
      "boundary": {},
      "polarization": {"C": "1/2"},
      "points": []
    })";
    const LogDelPezzo s = surface_from_json(text);
    CHECK(s.lattice.gram(0, 0) == Rational(2));
    CHECK(s.polarization(0) == Rational(1, 2));
}

TEST_CASE("schema violations are reported with a JSON path") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            surface_from_json(text);
            FAIL_CHECK("expected a schema or validation error");
        } catch (const IoError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        } catch (const ModelError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    SUBCASE("not JSON at all") { expect_error("{oops", "parse"); }
    SUBCASE("unknown top-level field") {
        expect_error(R"({"name":"x","curves":[{"name":"C"}],"gram":[[1]],
                         "boundary":{},"polarization":{"C":1},"points":[],"extra":1})",
                     "extra");
    }
    SUBCASE("unknown nested field carries its path") {
        expect_error(R"({"name":"x","curves":[{"name":"C"}],"gram":[[1]],
                         "boundary":{},"polarization":{"C":1},
                         "points":[{"name":"p","host":"C",
                                    "sing":{"r":2,"a":1,"b":1,"c":9},
                                    "boundary_local":0,"negative_support":{}}]})",
                     "$.points[0].sing");
    }
    SUBCASE("bad rational string") {
        expect_error(R"({"name":"x","curves":[{"name":"C"}],"gram":[["1/0"]],
                         "boundary":{},"polarization":{"C":1},"points":[]})",
                     "gram");
    }
    SUBCASE("gram row length mismatch") {
        expect_error(R"({"name":"x","curves":[{"name":"C"},{"name":"D"}],
                         "gram":[[1,0],[0]],
                         "boundary":{},"polarization":{"C":1,"D":1},"points":[]})",
                     "gram");
    }
    SUBCASE("divisor naming an untracked curve") {
        expect_error(R"({"name":"x","curves":[{"name":"C"}],"gram":[[1]],
                         "boundary":{"D":"1/2"},"polarization":{"C":1},"points":[]})",
                     "D");
    }
    SUBCASE("model-level validation still runs") {
        // boundary coefficient 1 is structurally fine but semantically out
        // of range
        expect_error(R"({"name":"x","curves":[{"name":"C"}],"gram":[[1]],
                         "boundary":{"C":1},"polarization":{"C":1},"points":[]})",
                     "boundary");
    }
}

TEST_CASE("file helpers round trip through disk") {
    const LogDelPezzo s = build_sn(4).base;
    const std::string path = "io_test_surface.json";
    save_surface(s, path);
    const LogDelPezzo back = load_surface(path);
    CHECK(surface_to_json(back) == surface_to_json(s));
    CHECK_THROWS_AS(load_surface("definitely_missing_file.json"), IoError);
}

TEST_CASE("certification reports serialize deterministically") {
    const CertificationReport r = certify_one(2, Rational(1, 1000000));
    CHECK(r.certified);
    CHECK(r.first_failure.empty());
    const std::string line1 = report_to_json_line(r);
    const std::string line2 = report_to_json_line(certify_one(2, Rational(1, 1000000)));
    CHECK(line1 == line2);
    CHECK(line1.find('\n') == std::string::npos);
    CHECK(line1.find("\"verdict\":\"certified\"") != std::string::npos);
    CHECK(line1.find("\"lambda\":\"45/44\"") != std::string::npos);
}

TEST_CASE("closed-form checks inside a report all match") {
    const CertificationReport r = certify_one(3, Rational(1, 1000000));
    CHECK(r.closed_form_checks.size() == 22);
    for (const auto& qc : r.closed_form_checks) {
        CAPTURE(qc.quantity);
        CHECK(qc.match);
    }
    CHECK(r.flags.size() == 3);
    for (const auto& f : r.flags) CHECK(f.exceeds_lambda);
    CHECK(r.zariski.size() == 6);
    CHECK(r.ledger.size() == 26);
    CHECK(r.link.match);
}

TEST_CASE("markdown renders from structs and from JSONL identically") {
    std::vector<CertificationReport> rs;
    rs.push_back(certify_one(2, Rational(1, 1000000)));
    rs.push_back(certify_one(3, Rational(1, 1000000)));
    std::string jsonl;
    for (const auto& r : rs) jsonl += report_to_json_line(r) + "\n";

    const std::string direct = reports_to_markdown(rs);
    const std::string via_jsonl = markdown_from_json_lines(jsonl);
    CHECK(direct == via_jsonl);
    CHECK(direct.find("| 2 | 45/44 | 10/7 | 40/23 | 40/23 |") != std::string::npos);
    CHECK(direct.find("2 of 2 members certified") != std::string::npos);
}

TEST_CASE("malformed JSONL is rejected with the line number") {
    try {
        markdown_from_json_lines("{\"n\": 2}\nnot json\n");
        FAIL("expected ModelError");
    } catch (const ModelError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 1") != std::string::npos); // missing fields on line 1
    }
    CHECK_THROWS_AS(markdown_from_json_lines("null\n"), ModelError);
}

TEST_CASE("surface analysis report") {
    const LogDelPezzo s = build_sn(2).base;
    const SurfaceReport r = analyze_surface(s, {"L_xy:O_z", "R_0:O_0"});
    CHECK(r.name == "S_2");
    CHECK(r.polarization_square == Rational(5, 16));
    CHECK(r.s_invariants.size() == 4);
    CHECK(r.families.size() == 4);
    REQUIRE(r.flags.size() == 2);
    CHECK(r.flags[0].delta_bound == Rational(10, 7));
    CHECK(r.flags[1].delta_bound == Rational(40, 23));

    const std::string j1 = surface_report_to_json(r);
    const std::string j2 = surface_report_to_json(analyze_surface(s, {"L_xy:O_z", "R_0:O_0"}));
    CHECK(j1 == j2);
    CHECK(surface_report_to_markdown(r).find("| L_xy | O_z |") != std::string::npos);

    CHECK_THROWS_AS(analyze_surface(s, {"L_xy"}), ModelError);
    CHECK_THROWS_AS(analyze_surface(s, {"ghost:O_z"}), ModelError);
    CHECK_THROWS_AS(analyze_surface(s, {"L_xy:ghost"}), ModelError);
}
