#include "iwa/padic_series.hpp"

#include "iwa/error.hpp"

#include <algorithm>

namespace iwa {

PAdicSeries::PAdicSeries(long p, std::vector<PAdicNumber> coeffs, std::optional<long> omega_level)
    : p_(p), coeffs_(std::move(coeffs)), level_(omega_level) {
    if (level_) {
        BigInt bound = ipow(p_, *level_);
        if (BigInt(static_cast<long>(coeffs_.size())) > bound) {
            fail(ErrorKind::InvalidInput, "series longer than p^n at its omega level");
        }
    }
}

PAdicSeries PAdicSeries::from_polynomial(const IntPoly& f, long p, long abs_cap, std::optional<long> omega_level) {
    std::vector<PAdicNumber> c;
    for (auto& x : f) c.push_back(PAdicNumber::from_integer(x, p, abs_cap));
    return PAdicSeries(p, std::move(c), omega_level);
}

PAdicSeries PAdicSeries::operator*(const PAdicSeries& o) const {
    std::size_t n = std::min(length(), o.length());
    std::vector<PAdicNumber> c(n, PAdicNumber::exact_zero(p_));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return PAdicSeries(p_, std::move(c));
}

PAdicSeries PAdicSeries::scaled(const BigRational& q) const {
    std::vector<PAdicNumber> c;
    for (auto& x : coeffs_) c.push_back(x.scaled(q));
    return PAdicSeries(p_, std::move(c), level_);
}

bool PAdicSeries::agrees_with(const PAdicSeries& o) const {
    std::size_t n = std::min(length(), o.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (!coeffs_[i].agrees_with(o.coeffs_[i])) return false;
    }
    return true;
}

std::string PAdicSeries::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += " + ";
        s += "(" + coeffs_[i].to_string() + ")*T^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

PAdicSeries series_solve(const PAdicSeries& target, const IntPoly& divisor) {
    const long p = target.prime();
    long dd = degree(divisor);
    if (dd < 0 || divisor[dd] != 1) fail(ErrorKind::InvalidInput, "series_solve needs a monic divisor");

    std::optional<long> level = target.omega_level();
    std::vector<long> guard;
    std::size_t out_len;
    if (level) {
        // The quotient is only defined modulo g = omega_n / divisor.
        IntPoly g = poly_divmod(omega(*level, p), divisor, nullptr);
        out_len = static_cast<std::size_t>(degree(g));
        long running = kInfinity;
        for (std::size_t k = 0; k < out_len; ++k) {
            if (g[k] != 0) running = std::min(running, valuation(g[k], p));
            guard.push_back(running);
        }
    } else {
        out_len = target.length() >= static_cast<std::size_t>(dd) ? target.length() - dd : 0;
        guard.assign(out_len, kInfinity);
    }

    // Common scale: all coefficients become integers modulo p^width after multiplying by p^-base.
    long base = kInfinity, top = kInfinity;
    for (auto& c : target.coefficients()) {
        top = std::min(top, c.absolute_precision());
        if (!c.is_zero()) base = std::min(base, c.valuation());
    }
    if (top == kInfinity) {
        std::vector<PAdicNumber> out;
        for (long g : guard) out.push_back(g == kInfinity ? PAdicNumber::exact_zero(p) : PAdicNumber::zero(p, g));
        return PAdicSeries(p, std::move(out), level);
    }
    if (base == kInfinity || base > top) base = std::min(top, 0L);
    long width = top - base;
    if (width <= 0) fail(ErrorKind::PrecisionExhausted, "target carries no digits");
    BigInt m = ipow(p, width);

    IntPoly r;
    for (auto& c : target.coefficients()) {
        if (c.is_zero()) {
            r.push_back(0);
        } else {
            r.push_back(c.unit() * ipow(p, c.valuation() - base));
        }
    }
    IntPoly rem;
    IntPoly q = poly_divmod(r, divisor, &rem);
    for (auto& x : rem) {
        if (!mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t())) {
            fail(ErrorKind::InvalidInput, "target is not divisible by the divisor");
        }
    }

    std::vector<PAdicNumber> out;
    bool any = false;
    for (std::size_t k = 0; k < out_len; ++k) {
        BigInt x = k < q.size() ? q[k] : BigInt(0);
        long abs = std::min(top, guard[k]);
        PAdicNumber c = PAdicNumber::from_integer(x, p, width).scaled(BigRational(ipow(p, std::max(base, 0L)),
                                                                                  ipow(p, std::max(-base, 0L))));
        c = c.is_exact_zero() ? PAdicNumber::zero(p, abs) : c.with_absolute_precision(abs);
        if (c.absolute_precision() >= 1) any = true;
        out.push_back(c);
    }
    if (!any && out_len > 0) fail(ErrorKind::PrecisionExhausted, "no quotient coefficient retains a digit");
    return PAdicSeries(p, std::move(out), level);
}

}  // namespace iwa
