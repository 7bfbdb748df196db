#include "iwa/curve_db.hpp"
#include "iwa/error.hpp"
#include "iwa/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <unistd.h>

using namespace iwa;
using nlohmann::json;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidInput;
}

std::string message_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

Report make_report(const std::string& label, long d, long p, Mode mode) {
    RunConfig cfg;
    cfg.depth = 3;
    CurveSymbols cs(resolve_curve(label).curve());
    return Report{label, d, p, mode, cfg, run_check(cs, d, p, mode, cfg)};
}

}  // namespace

TEST_CASE("bundled curves") {
    auto& all = bundled_curves();
    CHECK(all.size() == 5);
    for (auto& r : all) {
        CHECK(r.curve().conductor() == r.conductor);
        CHECK(find_bundled(r.label) == r);
        CHECK(bundled_labels().find(r.label) != std::string::npos);
    }
    CHECK_FALSE(find_bundled("99z9").has_value());
    CHECK(resolve_curve("0,-1,1,-10,-20").conductor == 11);
    CHECK(kind_of([] { resolve_curve("99z9"); }) == ErrorKind::InvalidInput);
    CHECK(message_of([] { resolve_curve("99z9"); }).find("11a1") != std::string::npos);
    CHECK(kind_of([] { resolve_curve("1,2,3"); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { resolve_curve("1,2,x,4,5"); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { make_record("bad", {0, -1, 1, -10, -20}, 12); }) == ErrorKind::LoadFailure);
}

TEST_CASE("curve tables") {
    auto ok = parse_curve_table("# comment\n11a1 11 0 -1 1 -10 -20\n\n37a1 37 0 0 1 -1 0  # trailing\n");
    REQUIRE(ok.size() == 2);
    CHECK(ok[1].label == "37a1");
    CHECK(parse_curve_table("").empty());
    CHECK(parse_curve_table("# nothing\n\n").empty());

    auto bad_line = message_of([] { parse_curve_table("11a1 11 0 -1 1 -10 -20\n37a1 37 0 0 1\n"); });
    CHECK(bad_line.find("line 2") != std::string::npos);
    CHECK(kind_of([] { parse_curve_table("x 11 0 -1 1 -10 -20 9\n"); }) == ErrorKind::LoadFailure);
    CHECK(message_of([] { parse_curve_table("a 11 0 -1 1 -10 -20\na 11 0 -1 1 -10 -20\n"); }).find("duplicate") !=
          std::string::npos);
    auto wrong_N = message_of([] { parse_curve_table("\n\nz 12 0 -1 1 -10 -20\n"); });
    CHECK(wrong_N.find("line 3") != std::string::npos);
    CHECK(kind_of([] { load_curve_file("/nonexistent/curves.txt"); }) == ErrorKind::LoadFailure);

    char path[] = "/tmp/iwa_curvesXXXXXX";
    int fd = mkstemp(path);
    REQUIRE(fd >= 0);
    close(fd);
    {
        std::ofstream f(path);
        f << "91a1 91 0 0 1 1 0\n";
    }
    auto loaded = load_curve_file(path);
    std::remove(path);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0] == *find_bundled("91a1"));
}

TEST_CASE("reports round-trip through JSON") {
    std::vector<Report> reports{make_report("11a1", 13, 7, Mode::Ordinary),
                                make_report("14a1", 19, 5, Mode::Supersingular),
                                make_report("14a1", 19, 7, Mode::Supersingular),
                                make_report("91a1", 11, 3, Mode::Sc)};
    Report inc = reports[0];
    inc.verdict.conclusion = Conclusion::Inconclusive;
    inc.verdict.conditions[3].status = Status::Inconclusive;
    inc.verdict.conditions[3].reason = "precision";
    inc.config.coeff_prec = 7;
    inc.config.threads = 3;
    reports.push_back(inc);
    for (auto& r : reports) {
        json j = to_json(r);
        CHECK(report_from_json(j) == r);
        CHECK(report_from_json(json::parse(j.dump(2))) == r);
        CHECK(j["conclusion"] == conclusion_name(r.verdict.conclusion));
        CHECK(j["triple"]["curve"] == r.curve);
        CHECK(j["caveats"].size() == 2);
        CHECK_FALSE(render_text(r).empty());
    }
    CHECK(config_from_json(config_to_json(inc.config)) == inc.config);
    CHECK(kind_of([] { report_from_json(json::parse("{\"triple\": 3}")); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { report_from_json(json::array()); }) == ErrorKind::InvalidInput);
}

TEST_CASE("exit codes") {
    CHECK(exit_code(Conclusion::VerifiedConditionalOnSha) == 0);
    CHECK(exit_code(Conclusion::ScVerified) == 0);
    CHECK(exit_code(Conclusion::Inconclusive) == 1);
    CHECK(exit_code(Conclusion::NotVerified) == 2);
    CHECK(exit_code(ErrorKind::PrecisionExhausted) == 4);
    for (ErrorKind k : {ErrorKind::InvalidInput, ErrorKind::BadReduction, ErrorKind::LoadFailure,
                        ErrorKind::ResourceLimit, ErrorKind::RamifiedPrime})
        CHECK(exit_code(k) == 3);
}

TEST_CASE("scan rendering") {
    ScanResult s;
    s.mode = Mode::Supersingular;
    Verdict yes;
    yes.conclusion = Conclusion::VerifiedConditionalOnSha;
    Verdict no;
    no.conclusion = Conclusion::NotVerified;
    s.cells = {{5, 19, yes, {}}, {5, 23, no, {}}, {5, 59, yes, {}}, {11, 7, std::nullopt, "BadReduction: x"}};
    CHECK(render_scan_table(s) == "p\td\n5\t(19, 59)\n");
    CHECK(render_scan_csv(s).find("5,19") != std::string::npos);
    CHECK(render_scan_log(s).find("BadReduction") != std::string::npos);
    auto j = scan_to_json("14a1", 100, 100, RunConfig{}, s);
    CHECK(j["table"][0]["d"] == json::array({19, 59}));
    CHECK(j["log"].size() == 4);
    CHECK(j["log"][3]["error"] == "BadReduction: x");
}

TEST_CASE("series rendering") {
    std::vector<PAdicNumber> c{PAdicNumber::exact_zero(7), PAdicNumber::zero(7, 3), PAdicNumber::from_integer(5, 7, 4)};
    auto text = render_series(PAdicSeries(7, c));
    CHECK(text.find("T^0: 0 (exact)") != std::string::npos);
    CHECK(text.find("T^1: 0 mod 7^3") != std::string::npos);
    CHECK(text.find("T^2: 5 mod 7^4") != std::string::npos);
}
