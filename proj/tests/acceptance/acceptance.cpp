// One PASS/FAIL line per acceptance criterion.
#include "iwa/checker.hpp"
#include "iwa/curve_db.hpp"
#include "iwa/invariants.hpp"
#include "iwa/lseries.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace iwa;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

const CurveSymbols& symbols(const std::string& label) {
    static std::map<std::string, CurveSymbols> cache;
    auto it = cache.find(label);
    if (it == cache.end()) it = cache.emplace(label, CurveSymbols(resolve_curve(label).curve())).first;
    return it->second;
}

RunConfig config(long n) {
    RunConfig c;
    c.depth = n;
    c.coeff_prec = 4;
    return c;
}

std::string list(const std::vector<long>& v) {
    std::ostringstream o;
    o << "(";
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? ", " : "") << v[i];
    o << ")";
    return o.str();
}

// Scales by u and compares T^1..T^k with the expected balanced residues mod p^4.
bool match_coefficients(const PAdicSeries& L, const PAdicNumber& u, const std::vector<long>& expect,
                        std::string& detail) {
    bool ok = true;
    for (std::size_t k = 1; k <= expect.size(); ++k) {
        if (L.length() <= k || L[k].absolute_precision() < 4) {
            detail += " T^" + std::to_string(k) + " lacks 4 digits;";
            ok = false;
            continue;
        }
        auto c = (L[k] * u).with_absolute_precision(4);
        long got = to_long(c.balanced_residue(4));
        if (got != expect[k - 1]) {
            detail += " T^" + std::to_string(k) + " = " + std::to_string(got) + ";";
            ok = false;
        }
    }
    return ok;
}

Outcome criterion1() {
    const long p = 7;
    auto L = ordinary_lseries(symbols("11a1"), p, 1, config(4));
    const BigInt target("-1827287233098838071872685754");
    Outcome o;
    if (L[0].is_zero() || L[0].valuation() != 0) return {false, "constant term is not a unit"};
    auto u = PAdicNumber::from_integer(target, p, 5) / L[0].with_absolute_precision(5);
    bool unit_is_one = u.agrees_with(PAdicNumber::from_integer(1, p, 5));
    bool coeffs = match_coefficients(L, u, {1188, -120, 882, 991, 136}, o.detail);
    bool constant = (L[0] * u).agrees_with(PAdicNumber::from_integer(target, p, 5));
    bool full = L[0].absolute_precision() >= 33 && (L[0].residue(33) - target) % ipow(p, 33) == 0;

    // Depth 3 carries three digits for these coefficients.
    auto L3 = ordinary_lseries(symbols("11a1"), p, 1, config(3));
    bool depth3 = true;
    const long expect[] = {1188, -120, 882, 991, 136};
    for (int k = 1; k <= 5; ++k)
        depth3 = depth3 && L3[k].absolute_precision() >= 3 &&
                 mod(to_long(L3[k].residue(3) - expect[k - 1]), 343) == 0;

    o.pass = coeffs && constant && depth3;
    o.detail = std::string("n=4: T^1..T^5 mod 7^4 ") + (coeffs ? "match" : "differ") + ", constant mod 7^5 " +
               (constant ? "matches" : "differs") + (unit_is_one ? ", u = 1" : ", u != 1") +
               (full ? ", constant agrees mod 7^33" : "") + "; n=3: T^1..T^5 mod 7^3 " +
               (depth3 ? "match" : "differ") + ";" + o.detail;
    return o;
}

Outcome criterion2() {
    const long p = 7;
    auto L = ordinary_lseries(symbols("11a1"), p, -52, config(4));
    Outcome o;
    if (L[1].is_zero() || L[1].valuation() != 0) return {false, "T^1 is not a unit"};
    // The constant vanishes, so T^1 fixes u.
    auto u = PAdicNumber::from_integer(213, p, 4) / L[1].with_absolute_precision(4);
    bool unit_is_one = u.agrees_with(PAdicNumber::from_integer(1, p, 4));
    bool coeffs = match_coefficients(L, u, {213, -649, -1190, -974, 101}, o.detail);
    bool zero = L[0].is_exact_zero();
    o.pass = coeffs && zero;
    o.detail = std::string("n=4: T^1..T^5 mod 7^4 ") + (coeffs ? "match" : "differ") + (unit_is_one ? ", u = 1" : ", u != 1") +
               ", constant " + (zero ? "exactly 0" : L[0].to_string()) + ";" + o.detail;
    return o;
}

Outcome criterion3() {
    struct Case {
        std::string name;
        std::function<PAdicSeries()> series;
        long lambda;
    };
    RunConfig cfg = config(3);
    std::vector<Case> cases{
        {"L_7(11a1)", [&] { return ordinary_lseries(symbols("11a1"), 7, 1, cfg); }, 0},
        {"L_7(11a1, -52)", [&] { return ordinary_lseries(symbols("11a1"), 7, -52, cfg); }, 1},
        {"L_5(37a1)", [&] { return ordinary_lseries(symbols("37a1"), 5, 1, cfg); }, 1},
        {"L_5(37a1, -11)", [&] { return ordinary_lseries(symbols("37a1"), 5, -11, cfg); }, 0},
        {"L_3+(91a1)", [&] { return signed_lseries(symbols("91a1"), 3, 1, cfg).first; }, 1},
        {"L_3+(91a1, -11)", [&] { return signed_lseries(symbols("91a1"), 3, -11, cfg).first; }, 0},
    };
    Outcome o{true, ""};
    for (auto& c : cases) {
        auto r = mu_lambda(c.series());
        bool ok = r.reliable && r.mu == 0 && r.lambda == c.lambda;
        o.pass = o.pass && ok;
        o.detail += " " + c.name + ": (" + std::to_string(r.mu) + "," +
                    (r.lambda ? std::to_string(*r.lambda) : std::string("?")) + ")" + (ok ? "" : " MISMATCH") + ";";
    }
    return o;
}

Outcome criterion4() {
    RunConfig cfg = config(3);
    auto a = check_ordinary(symbols("11a1"), 13, 7, cfg);
    auto b = check_ordinary(symbols("37a1"), 11, 5, cfg);
    auto c = check_sc_supersingular(symbols("91a1"), 11, 3, cfg);
    Outcome o;
    o.pass = a.conclusion == Conclusion::VerifiedConditionalOnSha &&
             b.conclusion == Conclusion::VerifiedConditionalOnSha && c.conclusion == Conclusion::ScVerified;
    o.detail = std::string("11a1/13/7 ") + conclusion_name(a.conclusion) + ", 37a1/11/5 " +
               conclusion_name(b.conclusion) + ", 91a1/11/3 " + conclusion_name(c.conclusion);
    return o;
}

Outcome criterion5() {
    using Table = std::map<long, std::vector<long>>;
    const std::vector<std::pair<std::string, Table>> expected{
        {"14a1", {{5, {19, 59, 71}}, {11, {19, 73, 79}}, {23, {19, 79, 83}}, {71, {23, 59}}}},
        {"30a1",
         {{11, {43, 79}},
          {23, {11, 43, 67, 79}},
          {47, {11, 23, 31, 43, 67}},
          {59, {11, 23, 31, 43, 47, 67}},
          {71, {11, 23, 31, 47, 59, 67}}}},
    };
    Outcome o{true, ""};
    for (auto& [label, want] : expected) {
        auto got = scan(symbols(label), 100, 100, Mode::Supersingular, RunConfig{}).table();
        std::set<long> rows;
        for (auto& [p, ds] : want) rows.insert(p);
        for (auto& [p, ds] : got) rows.insert(p);
        for (long p : rows) {
            auto w = want.count(p) ? want.at(p) : std::vector<long>{};
            auto g = got.count(p) ? got.at(p) : std::vector<long>{};
            if (w == g) continue;
            o.pass = false;
            o.detail += " " + label + " p=" + std::to_string(p) + ": got " + list(g) + " want " + list(w) + ";";
        }
    }
    if (o.pass) o.detail = " both tables match";
    return o;
}

Outcome criterion6(const std::vector<std::string>& suites) {
    if (suites.empty()) return {false, "no property suites given"};
    Outcome o{true, ""};
    for (auto& s : suites) {
        int rc = std::system((s + " --minimal > /dev/null 2>&1").c_str());
        std::string name = s.substr(s.find_last_of('/') + 1);
        o.detail += " " + name + (rc == 0 ? " ok" : " FAILED") + ";";
        o.pass = o.pass && rc == 0;
    }
    return o;
}

Outcome criterion7() {
    Outcome o{true, ""};
    // Coefficients never carry more digits than the guard schedule or M allows.
    for (long n : {3L, 4L}) {
        for (long D : {1L, -52L}) {
            auto L = ordinary_lseries(symbols("11a1"), 7, D, config(n));
            for (std::size_t k = 1; k < L.length(); ++k) {
                long cap = std::min(4L, omega_guard(n, 7, static_cast<long>(k)));
                if (!L[k].is_exact_zero() && L[k].absolute_precision() > cap) {
                    o.pass = false;
                    o.detail += " n=" + std::to_string(n) + " T^" + std::to_string(k) + " over-claims;";
                }
            }
        }
    }
    // ord_T only ever appears as a lower bound.
    RunConfig cfg = config(3);
    for (const Verdict& v : {check_ordinary(symbols("11a1"), 13, 7, cfg), check_ordinary(symbols("37a1"), 11, 5, cfg)}) {
        auto* c = v.find("ord.4");
        if (!c || c->evidence.value("bound", "") != "lower" || c->evidence.contains("ord_T")) {
            o.pass = false;
            o.detail += " ord.4 evidence lacks lower-bound typing;";
        }
        for (auto& cond : v.conditions)
            for (const char* side : {"E", "twist"})
                if (cond.evidence.contains(side) && !cond.evidence[side].contains("ord_T_lower")) {
                    o.pass = false;
                    o.detail += " " + cond.id + " series evidence lacks ord_T_lower;";
                }
    }
    if (o.pass) o.detail = " no coefficient exceeds min(M, guard); ord_T reported as a lower bound";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> expect_fail;
    std::vector<std::string> suites;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail");
    app.add_option("--suites", suites, "property test executables");
    CLI11_PARSE(app, argc, argv);

    std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                   [&] { return criterion6(suites); }, criterion7};
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) failed.insert(id);
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " [" << std::fixed
                  << std::setprecision(2) << secs << "s]" << (o.detail.starts_with(" ") ? "" : " ") << o.detail << "\n";
    }
    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    if (failed != expected) {
        std::cout << "failing set differs from the expected set\n";
        return 1;
    }
    return 0;
}
