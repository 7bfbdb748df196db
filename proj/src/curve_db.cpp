#include "iwa/curve_db.hpp"

#include "iwa/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace iwa {

CurveRecord make_record(const std::string& label, const std::array<long, 5>& a, long conductor) {
    CurveRecord r{label, a, conductor};
    long N;
    try {
        N = r.curve().conductor();
    } catch (const Error& e) {
        fail(ErrorKind::LoadFailure, label + ": " + e.what());
    }
    if (N != conductor) {
        fail(ErrorKind::LoadFailure,
             label + ": stated conductor " + std::to_string(conductor) + " but the curve has conductor " + std::to_string(N));
    }
    return r;
}

const std::vector<CurveRecord>& bundled_curves() {
    static const std::vector<CurveRecord> table = [] {
        return std::vector<CurveRecord>{
            make_record("11a1", {0, -1, 1, -10, -20}, 11),
            make_record("14a1", {1, 0, 1, 4, -6}, 14),
            make_record("30a1", {1, 0, 1, 1, 2}, 30),
            make_record("37a1", {0, 0, 1, -1, 0}, 37),
            make_record("91a1", {0, 0, 1, 1, 0}, 91),
        };
    }();
    return table;
}

std::optional<CurveRecord> find_bundled(const std::string& label) {
    for (auto& r : bundled_curves())
        if (r.label == label) return r;
    return std::nullopt;
}

std::string bundled_labels() {
    std::string s;
    for (auto& r : bundled_curves()) s += (s.empty() ? "" : ", ") + r.label;
    return s;
}

CurveRecord resolve_curve(const std::string& text) {
    if (auto r = find_bundled(text)) return *r;
    if (text.find(',') == std::string::npos) {
        fail(ErrorKind::InvalidInput, "unknown curve '" + text + "'; bundled labels: " + bundled_labels());
    }
    std::array<long, 5> a{};
    std::stringstream ss(text);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i == 5) fail(ErrorKind::InvalidInput, "expected five a-invariants");
        try {
            std::size_t used = 0;
            a[i] = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            fail(ErrorKind::InvalidInput, "bad a-invariant '" + tok + "'");
        }
        ++i;
    }
    if (i != 5) fail(ErrorKind::InvalidInput, "expected five a-invariants");
    WeierstrassCurve E(a[0], a[1], a[2], a[3], a[4]);
    return CurveRecord{"[" + text + "]", a, E.conductor()};
}

std::vector<CurveRecord> parse_curve_table(const std::string& text) {
    std::vector<CurveRecord> out;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string label;
        if (!(ls >> label)) continue;
        const std::string where = "line " + std::to_string(lineno);
        long N;
        std::array<long, 5> a{};
        if (!(ls >> N >> a[0] >> a[1] >> a[2] >> a[3] >> a[4])) fail(ErrorKind::LoadFailure, where + ": malformed record");
        std::string extra;
        if (ls >> extra) fail(ErrorKind::LoadFailure, where + ": trailing field '" + extra + "'");
        if (!seen.insert(label).second) fail(ErrorKind::LoadFailure, where + ": duplicate label " + label);
        try {
            out.push_back(make_record(label, a, N));
        } catch (const Error& e) {
            fail(ErrorKind::LoadFailure, where + ": " + e.what());
        }
    }
    return out;
}

std::vector<CurveRecord> load_curve_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::LoadFailure, "cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_curve_table(buf.str());
}

}  // namespace iwa
