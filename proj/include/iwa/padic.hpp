#pragma once

#include "iwa/nt.hpp"

#include <string>

namespace iwa {

// Element of Q_p known modulo p^absolute_precision. An exact zero has valuation kInfinity.
// A zero known only to finite precision has relative precision 0.
class PAdicNumber {
public:
    PAdicNumber() = default;

    static PAdicNumber exact_zero(long p);
    static PAdicNumber zero(long p, long absolute_precision);
    // Exact input reduced to absolute precision abs_cap (0 stays an exact zero).
    static PAdicNumber from_integer(const BigInt& x, long p, long abs_cap);
    static PAdicNumber from_rational(const BigRational& x, long p, long abs_cap);
    // Value p^val * unit, unit taken modulo p^rel.
    static PAdicNumber from_parts(long p, long val, long rel, const BigInt& unit);

    long prime() const { return p_; }
    bool is_exact_zero() const { return val_ == kInfinity; }
    bool is_zero() const { return is_exact_zero() || rel_ == 0; }
    // For an inexact zero this is the absolute precision (a lower bound on the true valuation).
    long valuation() const { return val_; }
    long relative_precision() const { return rel_; }
    long absolute_precision() const { return is_exact_zero() ? kInfinity : val_ + rel_; }
    const BigInt& unit() const { return unit_; }

    PAdicNumber operator+(const PAdicNumber& o) const;
    PAdicNumber operator-(const PAdicNumber& o) const;
    PAdicNumber operator-() const;
    PAdicNumber operator*(const PAdicNumber& o) const;
    PAdicNumber operator/(const PAdicNumber& o) const;
    PAdicNumber inverse() const;
    PAdicNumber pow(long e) const;
    // Multiplication by an exact rational; keeps the relative precision.
    PAdicNumber scaled(const BigRational& q) const;
    PAdicNumber with_absolute_precision(long k) const;

    // Representative in [0, p^k) of an integral value; requires k <= absolute_precision.
    BigInt residue(long k) const;
    // Representative in (-p^k/2, p^k/2].
    BigInt balanced_residue(long k) const;
    // Equal on every digit both values claim.
    bool agrees_with(const PAdicNumber& o) const;
    std::string to_string() const;

private:
    PAdicNumber(long p, long val, long rel, BigInt unit);
    static PAdicNumber normalized(long p, long base_val, BigInt x, long abs_prec);

    long p_ = 2;
    long val_ = kInfinity;
    long rel_ = 0;
    BigInt unit_ = 0;
};

// Root of x^2 - a_p x + p that is a p-adic unit, known to absolute precision cap.
PAdicNumber unit_root(long a_p, long p, long cap);

}  // namespace iwa
