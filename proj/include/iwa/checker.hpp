#pragma once

#include "iwa/config.hpp"
#include "iwa/modular_symbols.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace iwa {

enum class Status { Pass, Fail, Inconclusive, NotApplicable };
enum class Conclusion { VerifiedConditionalOnSha, ScVerified, NotVerified, Inconclusive };
enum class Mode { Ordinary, Supersingular, Sc };

const char* status_name(Status s);
const char* conclusion_name(Conclusion c);
const char* mode_name(Mode m);
Status parse_status(const std::string& s);
Conclusion parse_conclusion(const std::string& s);
Mode parse_mode(const std::string& s);

struct ConditionResult {
    std::string id;
    Status status = Status::Inconclusive;
    nlohmann::json evidence = nlohmann::json::object();
    // "exact" or the p-adic precision the evidence was read at.
    std::string precision = "exact";
    // Set for inconclusive results: "precision", "certificate-not-found", ...
    std::string reason;

    bool operator==(const ConditionResult&) const = default;
};

struct Verdict {
    Conclusion conclusion = Conclusion::Inconclusive;
    std::vector<ConditionResult> conditions;
    std::string narrative;
    std::vector<std::string> caveats;

    const ConditionResult* find(const std::string& id) const;
    bool operator==(const Verdict&) const = default;
};

// Standing assumptions attached to every verdict.
std::vector<std::string> standing_caveats();

// K = Q(sqrt(-d)).
Verdict check_ordinary(const CurveSymbols& cs, long d, long p, const RunConfig& cfg);
Verdict check_supersingular(const CurveSymbols& cs, long d, long p, const RunConfig& cfg);
Verdict check_sc_supersingular(const CurveSymbols& cs, long d, long p, const RunConfig& cfg);
Verdict run_check(const CurveSymbols& cs, long d, long p, Mode mode, const RunConfig& cfg);

struct ScanCell {
    long p = 0;
    long d = 0;
    std::optional<Verdict> verdict;
    std::string error;

    bool verified() const;
};

struct ScanResult {
    Mode mode = Mode::Supersingular;
    std::vector<ScanCell> cells;

    // Verified d for each p, both ascending.
    std::map<long, std::vector<long>> table() const;
};

// Primes d < d_max and odd primes p < p_max of the mode's reduction type.
ScanResult scan(const CurveSymbols& cs, long d_max, long p_max, Mode mode, const RunConfig& cfg);

}  // namespace iwa
