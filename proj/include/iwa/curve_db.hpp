#pragma once

#include "iwa/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iwa {

struct CurveRecord {
    std::string label;
    std::array<long, 5> a{};
    long conductor = 0;

    WeierstrassCurve curve() const { return WeierstrassCurve(a[0], a[1], a[2], a[3], a[4]); }
    bool operator==(const CurveRecord&) const = default;
};

// Recomputes the conductor; throws LoadFailure on mismatch.
CurveRecord make_record(const std::string& label, const std::array<long, 5>& a, long conductor);

const std::vector<CurveRecord>& bundled_curves();
std::optional<CurveRecord> find_bundled(const std::string& label);
std::string bundled_labels();

// A bundled label or "a1,a2,a3,a4,a6".
CurveRecord resolve_curve(const std::string& text);

// Lines "<label> <N> <a1> <a2> <a3> <a4> <a6>"; '#' starts a comment.
std::vector<CurveRecord> parse_curve_table(const std::string& text);
std::vector<CurveRecord> load_curve_file(const std::string& path);

}  // namespace iwa
