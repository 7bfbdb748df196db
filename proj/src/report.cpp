#include "iwa/report.hpp"

#include <sstream>

namespace iwa {

using nlohmann::json;

json config_to_json(const RunConfig& c) {
    return {{"depth", c.depth},
            {"coeff_prec", c.coeff_prec},
            {"constant_digits", c.constant_digits},
            {"numeric_digits", c.numeric_digits},
            {"index_bound", c.index_bound},
            {"max_terms", c.max_terms},
            {"threads", c.threads}};
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.depth = j.at("depth").get<long>();
    c.coeff_prec = j.at("coeff_prec").get<long>();
    c.constant_digits = j.at("constant_digits").get<long>();
    c.numeric_digits = j.at("numeric_digits").get<int>();
    c.index_bound = j.at("index_bound").get<long>();
    c.max_terms = j.at("max_terms").get<long>();
    c.threads = j.at("threads").get<unsigned>();
    return c;
}

json to_json(const Report& r) {
    json conds = json::array();
    for (auto& c : r.verdict.conditions) {
        json jc = {{"id", c.id}, {"status", status_name(c.status)}, {"evidence", c.evidence}, {"precision", c.precision}};
        if (!c.reason.empty()) jc["reason"] = c.reason;
        conds.push_back(jc);
    }
    return {{"triple", {{"curve", r.curve}, {"d", r.d}, {"p", r.p}}},
            {"mode", mode_name(r.mode)},
            {"config", config_to_json(r.config)},
            {"conditions", conds},
            {"conclusion", conclusion_name(r.verdict.conclusion)},
            {"narrative", r.verdict.narrative},
            {"caveats", r.verdict.caveats}};
}

Report report_from_json(const json& j) {
    Report r;
    try {
        r.curve = j.at("triple").at("curve").get<std::string>();
        r.d = j.at("triple").at("d").get<long>();
        r.p = j.at("triple").at("p").get<long>();
        r.mode = parse_mode(j.at("mode").get<std::string>());
        r.config = config_from_json(j.at("config"));
        for (auto& jc : j.at("conditions")) {
            ConditionResult c;
            c.id = jc.at("id").get<std::string>();
            c.status = parse_status(jc.at("status").get<std::string>());
            c.evidence = jc.at("evidence");
            c.precision = jc.at("precision").get<std::string>();
            c.reason = jc.value("reason", std::string());
            r.verdict.conditions.push_back(std::move(c));
        }
        r.verdict.conclusion = parse_conclusion(j.at("conclusion").get<std::string>());
        r.verdict.narrative = j.value("narrative", std::string());
        r.verdict.caveats = j.at("caveats").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed report: ") + e.what());
    }
    return r;
}

std::string render_text(const Report& r) {
    std::ostringstream o;
    o << "curve " << r.curve << ", K = Q(sqrt(-" << r.d << ")), p = " << r.p << ", mode " << mode_name(r.mode)
      << "\n";
    for (auto& c : r.verdict.conditions) {
        o << "  " << c.id;
        for (std::size_t i = c.id.size(); i < 8; ++i) o << ' ';
        o << status_name(c.status);
        if (!c.reason.empty()) o << " (" << c.reason << ")";
        if (c.precision != "exact") o << " [" << c.precision << "]";
        o << "\n      " << c.evidence.dump() << "\n";
    }
    o << "conclusion: " << conclusion_name(r.verdict.conclusion) << "\n";
    if (!r.verdict.narrative.empty()) o << r.verdict.narrative << "\n";
    o << "caveats:";
    for (auto& c : r.verdict.caveats) o << " " << c;
    o << "\n";
    return o.str();
}

int exit_code(Conclusion c) {
    switch (c) {
    case Conclusion::VerifiedConditionalOnSha:
    case Conclusion::ScVerified: return 0;
    case Conclusion::Inconclusive: return 1;
    case Conclusion::NotVerified: return 2;
    }
    return 3;
}

int exit_code(ErrorKind k) { return k == ErrorKind::PrecisionExhausted ? 4 : 3; }

json scan_to_json(const std::string& curve, long d_max, long p_max, const RunConfig& cfg, const ScanResult& s) {
    json table = json::array();
    for (auto& [p, ds] : s.table()) table.push_back({{"p", p}, {"d", ds}});
    json log = json::array();
    for (auto& c : s.cells) {
        json e = {{"p", c.p}, {"d", c.d}};
        if (c.verdict) e["conclusion"] = conclusion_name(c.verdict->conclusion);
        else e["error"] = c.error;
        log.push_back(e);
    }
    return {{"curve", curve}, {"mode", mode_name(s.mode)}, {"d_max", d_max}, {"p_max", p_max},
            {"config", config_to_json(cfg)}, {"table", table}, {"log", log}};
}

std::string render_scan_table(const ScanResult& s) {
    std::ostringstream o;
    o << "p\td\n";
    for (auto& [p, ds] : s.table()) {
        o << p << "\t(";
        for (std::size_t i = 0; i < ds.size(); ++i) o << (i ? ", " : "") << ds[i];
        o << ")\n";
    }
    return o.str();
}

std::string render_scan_csv(const ScanResult& s) {
    std::ostringstream o;
    o << "p,d\n";
    for (auto& [p, ds] : s.table())
        for (long d : ds) o << p << "," << d << "\n";
    return o.str();
}

std::string render_scan_log(const ScanResult& s) {
    std::ostringstream o;
    for (auto& c : s.cells) {
        o << "p=" << c.p << " d=" << c.d << " ";
        if (!c.verdict) {
            o << "error " << c.error << "\n";
            continue;
        }
        o << conclusion_name(c.verdict->conclusion);
        for (auto& cond : c.verdict->conditions)
            if (cond.status != Status::Pass) o << " " << cond.id << "=" << status_name(cond.status);
        o << "\n";
    }
    return o.str();
}

std::string render_series(const PAdicSeries& s) {
    std::ostringstream o;
    const std::string p = std::to_string(s.prime());
    for (std::size_t k = 0; k < s.length(); ++k) {
        const PAdicNumber& c = s[k];
        o << "T^" << k << ": ";
        if (c.is_exact_zero()) {
            o << "0 (exact)";
        } else if (c.is_zero()) {
            o << "0 mod " << p << "^" << c.absolute_precision();
        } else if (c.valuation() >= 0) {
            o << c.balanced_residue(c.absolute_precision()) << " mod " << p << "^" << c.absolute_precision();
        } else {
            o << c.unit() << "*" << p << "^" << c.valuation() << " mod " << p << "^" << c.absolute_precision();
        }
        o << "\n";
    }
    return o.str();
}

}  // namespace iwa
