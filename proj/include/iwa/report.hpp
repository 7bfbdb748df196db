#pragma once

#include "iwa/checker.hpp"
#include "iwa/error.hpp"
#include "iwa/padic_series.hpp"

#include <json.hpp>

#include <string>

namespace iwa {

struct Report {
    std::string curve;
    long d = 0;
    long p = 0;
    Mode mode = Mode::Ordinary;
    RunConfig config;
    Verdict verdict;

    bool operator==(const Report&) const = default;
};

nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& r);

int exit_code(Conclusion c);
int exit_code(ErrorKind k);

nlohmann::json scan_to_json(const std::string& curve, long d_max, long p_max, const RunConfig& cfg,
                            const ScanResult& s);
// Rows "p  (d1, d2, ...)".
std::string render_scan_table(const ScanResult& s);
std::string render_scan_csv(const ScanResult& s);
std::string render_scan_log(const ScanResult& s);

// One line per coefficient, "T^k: value mod p^a".
std::string render_series(const PAdicSeries& s);

}  // namespace iwa
