#include "iwa/invariants.hpp"

#include <algorithm>

namespace iwa {

long ord_T_lower_bound(const PAdicSeries& series) {
    long k = 0;
    while (static_cast<std::size_t>(k) < series.length() && series[k].is_zero()) ++k;
    return k;
}

InvariantReport mu_lambda(const PAdicSeries& s) {
    InvariantReport r;
    r.ord_T_lower = ord_T_lower_bound(s);
    const long len = static_cast<long>(s.length());
    long mu = kInfinity;
    long lambda = -1;
    for (long k = 0; k < len; ++k) {
        if (!s[k].is_zero() && s[k].valuation() < mu) {
            mu = s[k].valuation();
            lambda = k;
        }
    }
    if (lambda < 0) {
        long bound = kInfinity;
        for (long k = 0; k < len; ++k) bound = std::min(bound, s[k].absolute_precision());
        r.mu = bound == kInfinity ? 0 : std::max(0L, bound);
        r.mu_lower_bound = true;
        r.reason = "no coefficient is nonzero at the working precision";
        return r;
    }
    r.mu = mu;
    for (long k = 0; k < len; ++k) {
        if (!s[k].is_zero()) continue;
        long cap = s[k].absolute_precision();
        if (k < lambda && cap <= mu) {
            r.reason = "T^" + std::to_string(k) + " is not provably above mu";
            return r;
        }
        if (k > lambda && cap < mu) {
            r.mu_lower_bound = true;
            r.reason = "T^" + std::to_string(k) + " may have smaller valuation";
            return r;
        }
    }
    long window = len;
    if (auto n = s.omega_level()) {
        long w = 1;
        for (long i = 1; i < *n; ++i) w *= s.prime();
        window = std::min(window, w * (s.prime() - 1));
    }
    if (lambda >= window) {
        r.reason = "lambda witness lies outside the trusted window";
        return r;
    }
    r.lambda = lambda;
    r.reliable = true;
    return r;
}

}  // namespace iwa
