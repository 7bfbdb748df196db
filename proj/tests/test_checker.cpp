#include "iwa/checker.hpp"
#include "iwa/curve_db.hpp"
#include "iwa/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace iwa;

namespace {

const CurveSymbols& symbols(const std::string& label) {
    static std::map<std::string, CurveSymbols> cache;
    auto it = cache.find(label);
    if (it == cache.end()) it = cache.emplace(label, CurveSymbols(resolve_curve(label).curve())).first;
    return it->second;
}

RunConfig cfg_depth(long n) {
    RunConfig c;
    c.depth = n;
    return c;
}

std::set<std::string> ids(const Verdict& v) {
    std::set<std::string> s;
    for (auto& c : v.conditions) s.insert(c.id);
    return s;
}

Status status(const Verdict& v, const std::string& id) {
    auto* c = v.find(id);
    REQUIRE(c);
    return c->status;
}

}  // namespace

TEST_CASE("ordinary verdicts") {
    auto v = check_ordinary(symbols("11a1"), 13, 7, cfg_depth(3));
    CHECK(v.conclusion == Conclusion::VerifiedConditionalOnSha);
    CHECK(ids(v) == std::set<std::string>{"ord.0", "ord.1", "ord.2", "ord.3", "ord.4", "ord.r0"});
    for (const char* id : {"ord.0", "ord.1", "ord.2", "ord.3", "ord.4"}) CHECK(status(v, id) == Status::Pass);
    CHECK(status(v, "ord.r0") == Status::NotApplicable);
    CHECK(v.find("ord.3")->evidence["lambda_sum"] == 1);

    auto w = check_ordinary(symbols("37a1"), 11, 5, cfg_depth(3));
    CHECK(w.conclusion == Conclusion::VerifiedConditionalOnSha);
    CHECK(w.find("ord.3")->evidence["E"]["lambda"] == 1);
    CHECK(w.find("ord.3")->evidence["twist"]["lambda"] == 0);
}

TEST_CASE("ordinary input errors") {
    const auto& cs = symbols("11a1");
    auto kind = [&](long d, long p) {
        try {
            check_ordinary(cs, d, p, cfg_depth(3));
        } catch (const Error& e) {
            return e.kind();
        }
        FAIL("expected an error");
        return ErrorKind::InvalidInput;
    };
    CHECK(kind(13, 11) == ErrorKind::BadReduction);
    CHECK(kind(13, 9) == ErrorKind::InvalidInput);
    CHECK(kind(7, 7) == ErrorKind::RamifiedPrime);
    CHECK(kind(13, 2) == ErrorKind::InvalidInput);
    CHECK_THROWS_AS(check_ordinary(symbols("37a1"), 11, 3, cfg_depth(3)), Error);
}

TEST_CASE("supersingular verdicts") {
    auto v = check_supersingular(symbols("14a1"), 19, 5, cfg_depth(3));
    CHECK(v.conclusion == Conclusion::VerifiedConditionalOnSha);
    CHECK(ids(v) == std::set<std::string>{"ss.1", "ss.2", "ss.3", "ss.4", "ss.5"});
    auto w = check_supersingular(symbols("30a1"), 11, 59, cfg_depth(3));
    CHECK(w.conclusion == Conclusion::VerifiedConditionalOnSha);

    // Bad reduction at 7.
    auto b = check_supersingular(symbols("14a1"), 19, 7, cfg_depth(3));
    CHECK(b.conclusion == Conclusion::NotVerified);
    CHECK(status(b, "ss.1") == Status::Fail);
    for (const char* id : {"ss.2", "ss.3", "ss.4", "ss.5"}) CHECK(status(b, id) == Status::NotApplicable);

    // 5 is inert in Q(sqrt(-2)).
    auto inert = check_supersingular(symbols("14a1"), 2, 5, cfg_depth(3));
    CHECK(status(inert, "ss.3") == Status::Fail);
    CHECK(inert.conclusion == Conclusion::NotVerified);

    // L(E^(-23), 1) = 0 for 14a1.
    auto z = check_supersingular(symbols("14a1"), 23, 71, cfg_depth(3));
    CHECK(status(z, "ss.5") == Status::Fail);
}

TEST_CASE("sc verdicts") {
    auto v = check_sc_supersingular(symbols("91a1"), 11, 3, cfg_depth(3));
    CHECK(v.conclusion == Conclusion::ScVerified);
    CHECK(ids(v) == std::set<std::string>{"sc.0p", "sc.1", "sc.2", "sc.3p", "sc.5p"});
    CHECK(v.find("sc.3p")->evidence["sign"] == "plus");
    CHECK(v.find("sc.3p")->precision != "exact");

    // 3 is inert in Q(i).
    auto n = check_sc_supersingular(symbols("91a1"), 1, 3, cfg_depth(3));
    CHECK(status(n, "sc.0p") == Status::Fail);
    CHECK(n.conclusion == Conclusion::NotVerified);

    // a_3(37a1) = -3 is divisible by 3 but not zero.
    auto o = check_sc_supersingular(symbols("37a1"), 2, 3, cfg_depth(3));
    CHECK(status(o, "sc.3p") == Status::NotApplicable);
    CHECK(o.conclusion == Conclusion::NotVerified);
}

TEST_CASE("every verdict carries the standing caveats and closed evidence") {
    std::vector<Verdict> vs{check_ordinary(symbols("11a1"), 13, 7, cfg_depth(3)),
                            check_supersingular(symbols("14a1"), 19, 5, cfg_depth(3)),
                            check_sc_supersingular(symbols("91a1"), 11, 3, cfg_depth(3)),
                            check_supersingular(symbols("14a1"), 19, 7, cfg_depth(3))};
    for (auto& v : vs) {
        CHECK(v.caveats == standing_caveats());
        CHECK_FALSE(v.narrative.empty());
        for (auto& c : v.conditions) {
            CAPTURE(c.id);
            CHECK(c.evidence.is_object());
            CHECK((c.precision == "exact" || c.precision.rfind("O(", 0) == 0));
            CHECK((c.status == Status::Inconclusive) == !c.reason.empty());
        }
    }
    CHECK(std::find(vs[0].caveats.begin(), vs[0].caveats.end(), "sha-finiteness-assumed") != vs[0].caveats.end());
}

TEST_CASE("more precision never flips a decided condition") {
    for (long n : {3L, 4L}) {
        auto lo = check_ordinary(symbols("11a1"), 13, 7, cfg_depth(n - 1));
        auto hi = check_ordinary(symbols("11a1"), 13, 7, cfg_depth(n));
        for (auto& c : lo.conditions) {
            if (c.status != Status::Pass && c.status != Status::Fail) continue;
            CAPTURE(c.id);
            CHECK(status(hi, c.id) == c.status);
        }
    }
}

TEST_CASE("name round trips") {
    for (Status s : {Status::Pass, Status::Fail, Status::Inconclusive, Status::NotApplicable})
        CHECK(parse_status(status_name(s)) == s);
    for (Mode m : {Mode::Ordinary, Mode::Supersingular, Mode::Sc}) CHECK(parse_mode(mode_name(m)) == m);
    for (Conclusion c : {Conclusion::VerifiedConditionalOnSha, Conclusion::ScVerified, Conclusion::NotVerified,
                         Conclusion::Inconclusive})
        CHECK(parse_conclusion(conclusion_name(c)) == c);
    CHECK_THROWS_AS(parse_mode("bogus"), Error);
}

TEST_CASE("scans") {
    const auto& cs = symbols("14a1");
    auto empty = scan(cs, 2, 100, Mode::Supersingular, cfg_depth(3));
    CHECK(empty.cells.empty());
    CHECK(empty.table().empty());

    RunConfig one = cfg_depth(3);
    one.threads = 1;
    auto ref = scan(cs, 60, 30, Mode::Supersingular, one);
    CHECK(ref.table().at(5) == std::vector<long>{19, 59});
    for (std::size_t i = 1; i < ref.cells.size(); ++i) {
        auto& a = ref.cells[i - 1];
        auto& b = ref.cells[i];
        CHECK((a.p < b.p || (a.p == b.p && a.d < b.d)));
    }
    for (unsigned t : {4u, 8u}) {
        RunConfig c = one;
        c.threads = t;
        auto r = scan(cs, 60, 30, Mode::Supersingular, c);
        REQUIRE(r.cells.size() == ref.cells.size());
        for (std::size_t i = 0; i < r.cells.size(); ++i) {
            CHECK(r.cells[i].p == ref.cells[i].p);
            CHECK(r.cells[i].d == ref.cells[i].d);
            CHECK(r.cells[i].error == ref.cells[i].error);
            CHECK(r.cells[i].verdict == ref.cells[i].verdict);
        }
    }
}
