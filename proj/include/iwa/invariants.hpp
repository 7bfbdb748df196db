#pragma once

#include "iwa/padic_series.hpp"

#include <optional>
#include <string>

namespace iwa {

struct InvariantReport {
    long mu = 0;
    // mu is only a lower bound (no coefficient was nonzero to its precision).
    bool mu_lower_bound = false;
    // Unset when unresolved.
    std::optional<long> lambda;
    // Lower bound on ord_T, never an equality.
    long ord_T_lower = 0;
    bool reliable = false;
    std::string reason;

    bool operator==(const InvariantReport&) const = default;
};

InvariantReport mu_lambda(const PAdicSeries& series);

// Number of leading coefficients that vanish to their full precision.
long ord_T_lower_bound(const PAdicSeries& series);

}  // namespace iwa
