#include "iwa/padic.hpp"

#include "iwa/error.hpp"

#include <algorithm>

namespace iwa {

namespace {

BigInt reduce(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt inverse_mod(const BigInt& x, const BigInt& m) {
    BigInt r;
    if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t())) fail(ErrorKind::InvalidInput, "not a unit");
    return r;
}

}  // namespace

PAdicNumber::PAdicNumber(long p, long val, long rel, BigInt unit) : p_(p), val_(val), rel_(rel), unit_(std::move(unit)) {}

PAdicNumber PAdicNumber::exact_zero(long p) { return PAdicNumber(p, kInfinity, 0, 0); }

PAdicNumber PAdicNumber::zero(long p, long absolute_precision) { return PAdicNumber(p, absolute_precision, 0, 0); }

PAdicNumber PAdicNumber::normalized(long p, long base_val, BigInt x, long abs_prec) {
    if (abs_prec <= base_val) return zero(p, abs_prec);
    x = reduce(x, ipow(p, abs_prec - base_val));
    if (x == 0) return zero(p, abs_prec);
    long v = iwa::valuation(x, p);
    BigInt u = x / ipow(p, v);
    return PAdicNumber(p, base_val + v, abs_prec - base_val - v, u);
}

PAdicNumber PAdicNumber::from_integer(const BigInt& x, long p, long abs_cap) {
    if (x == 0) return exact_zero(p);
    return normalized(p, 0, x, abs_cap);
}

PAdicNumber PAdicNumber::from_rational(const BigRational& x, long p, long abs_cap) {
    if (x == 0) return exact_zero(p);
    long vn = iwa::valuation(x.get_num(), p);
    long vd = iwa::valuation(x.get_den(), p);
    long v = vn - vd;
    if (abs_cap <= v) return zero(p, abs_cap);
    long rel = abs_cap - v;
    BigInt m = ipow(p, rel);
    BigInt num = x.get_num() / ipow(p, vn);
    BigInt den = x.get_den() / ipow(p, vd);
    BigInt u = reduce(num * inverse_mod(den, m), m);
    return PAdicNumber(p, v, rel, u);
}

PAdicNumber PAdicNumber::from_parts(long p, long val, long rel, const BigInt& unit) {
    if (rel <= 0) return zero(p, val);
    if (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p))) return normalized(p, val, unit, val + rel);
    return PAdicNumber(p, val, rel, reduce(unit, ipow(p, rel)));
}

PAdicNumber PAdicNumber::operator+(const PAdicNumber& o) const {
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    long abs = std::min(absolute_precision(), o.absolute_precision());
    long base = std::min(val_, o.val_);
    BigInt x = unit_ * ipow(p_, val_ - base) + o.unit_ * ipow(p_, o.val_ - base);
    return normalized(p_, base, x, abs);
}

PAdicNumber PAdicNumber::operator-() const {
    if (is_zero()) return *this;
    return PAdicNumber(p_, val_, rel_, reduce(-unit_, ipow(p_, rel_)));
}

PAdicNumber PAdicNumber::operator-(const PAdicNumber& o) const { return *this + (-o); }

PAdicNumber PAdicNumber::operator*(const PAdicNumber& o) const {
    if (is_exact_zero() || o.is_exact_zero()) return exact_zero(p_);
    long rel = std::min(rel_, o.rel_);
    long val = val_ + o.val_;
    if (rel == 0) return zero(p_, val);
    BigInt m = ipow(p_, rel);
    return PAdicNumber(p_, val, rel, reduce(unit_ * o.unit_, m));
}

PAdicNumber PAdicNumber::inverse() const {
    if (is_zero()) fail(ErrorKind::PrecisionExhausted, "inverse of a p-adic zero");
    return PAdicNumber(p_, -val_, rel_, inverse_mod(unit_, ipow(p_, rel_)));
}

PAdicNumber PAdicNumber::operator/(const PAdicNumber& o) const { return *this * o.inverse(); }

PAdicNumber PAdicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return from_integer(1, p_, std::max(rel_, 1L));
    if (is_exact_zero()) return *this;
    if (rel_ == 0) return zero(p_, val_ * e);
    BigInt m = ipow(p_, rel_);
    BigInt u;
    mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
    return PAdicNumber(p_, val_ * e, rel_, u);
}

PAdicNumber PAdicNumber::scaled(const BigRational& q) const {
    if (q == 0 || is_exact_zero()) return exact_zero(p_);
    long vn = iwa::valuation(q.get_num(), p_);
    long vd = iwa::valuation(q.get_den(), p_);
    long v = vn - vd;
    if (rel_ == 0) return zero(p_, val_ + v);
    BigInt m = ipow(p_, rel_);
    BigInt num = q.get_num() / ipow(p_, vn);
    BigInt den = q.get_den() / ipow(p_, vd);
    return PAdicNumber(p_, val_ + v, rel_, reduce(unit_ * num * inverse_mod(den, m), m));
}

PAdicNumber PAdicNumber::with_absolute_precision(long k) const {
    if (is_exact_zero()) return zero(p_, k);
    if (k >= absolute_precision()) return *this;
    return normalized(p_, val_, unit_, k);
}

BigInt PAdicNumber::residue(long k) const {
    if (k > absolute_precision()) fail(ErrorKind::PrecisionExhausted, "residue beyond known precision");
    if (k <= 0) return 0;
    if (is_zero()) return 0;
    if (val_ < 0) fail(ErrorKind::InvalidInput, "residue of a non-integral p-adic number");
    if (val_ >= k) return 0;
    return reduce(unit_ * ipow(p_, val_), ipow(p_, k));
}

BigInt PAdicNumber::balanced_residue(long k) const {
    BigInt r = residue(k);
    BigInt m = ipow(p_, k);
    if (2 * r > m) r -= m;
    return r;
}

bool PAdicNumber::agrees_with(const PAdicNumber& o) const {
    long k = std::min(absolute_precision(), o.absolute_precision());
    if (k == kInfinity) return true;
    PAdicNumber d = *this - o;
    return d.is_zero() || d.valuation() >= k;
}

std::string PAdicNumber::to_string() const {
    if (is_exact_zero()) return "0";
    if (rel_ == 0) return "O(" + std::to_string(p_) + "^" + std::to_string(val_) + ")";
    std::string s;
    if (val_ >= 0) {
        s = balanced_residue(absolute_precision()).get_str();
    } else {
        s = unit_.get_str() + "*" + std::to_string(p_) + "^" + std::to_string(val_);
    }
    return s + " + O(" + std::to_string(p_) + "^" + std::to_string(absolute_precision()) + ")";
}

PAdicNumber unit_root(long a_p, long p, long cap) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidInput, "unit_root needs an odd prime");
    if (mod(a_p, p) == 0) fail(ErrorKind::SupersingularInput, "a_p is divisible by p");
    if (cap < 1) cap = 1;
    // Newton iteration on f(x) = x^2 - a_p x + p starting from x = a_p; f'(x) = 2x - a_p is a unit there.
    BigInt m = ipow(p, cap);
    BigInt x = reduce(BigInt(a_p), m);
    for (long k = 1; k < cap; k *= 2) {
        BigInt f = x * x - a_p * x + p;
        BigInt df = 2 * x - a_p;
        x = reduce(x - f * inverse_mod(reduce(df, m), m), m);
    }
    return PAdicNumber::from_integer(x == 0 ? m : x, p, cap);
}

}  // namespace iwa
