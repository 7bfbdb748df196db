#pragma once

#include "iwa/padic.hpp"
#include "iwa/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iwa {

// Truncated power series in T; with an omega level n the series is only defined modulo omega(n, p).
class PAdicSeries {
public:
    PAdicSeries(long p, std::vector<PAdicNumber> coeffs, std::optional<long> omega_level = std::nullopt);

    // Integer polynomial with every coefficient known to absolute precision abs_cap.
    static PAdicSeries from_polynomial(const IntPoly& f, long p, long abs_cap,
                                       std::optional<long> omega_level = std::nullopt);

    long prime() const { return p_; }
    std::size_t length() const { return coeffs_.size(); }
    const PAdicNumber& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<PAdicNumber>& coefficients() const { return coeffs_; }
    std::optional<long> omega_level() const { return level_; }

    // Product truncated to the shorter length.
    PAdicSeries operator*(const PAdicSeries& o) const;
    PAdicSeries scaled(const BigRational& q) const;
    bool agrees_with(const PAdicSeries& o) const;
    std::string to_string() const;

private:
    long p_;
    std::vector<PAdicNumber> coeffs_;
    std::optional<long> level_;
};

// q with q * divisor = target (mod omega_n when target carries a level). divisor must be monic.
// Coefficient k of q is only defined modulo omega_n / divisor; its precision is capped accordingly.
PAdicSeries series_solve(const PAdicSeries& target, const IntPoly& divisor);

}  // namespace iwa
