#pragma once

#include "iwa/nt.hpp"

#include <vector>

namespace iwa {

// Integer polynomial in T, coefficients from the constant term upward.
using IntPoly = std::vector<BigInt>;

enum class Sign { Plus = 1, Minus = -1 };

int sign_value(Sign s);
const char* sign_name(Sign s);

void trim(IntPoly& f);
long degree(const IntPoly& f);
IntPoly poly_add(const IntPoly& f, const IntPoly& g);
IntPoly poly_sub(const IntPoly& f, const IntPoly& g);
IntPoly poly_mul(const IntPoly& f, const IntPoly& g);
IntPoly poly_scale(const IntPoly& f, const BigInt& c);
// Exact division by a monic polynomial: returns quotient, stores the remainder.
IntPoly poly_divmod(const IntPoly& f, const IntPoly& monic, IntPoly* remainder);
IntPoly poly_mod(const IntPoly& f, const IntPoly& monic);
// f(1 + T) given f(X).
IntPoly shift_one(const IntPoly& f);

// (1+T)^(p^n) - 1.
IntPoly omega(long n, long p);
// Phi_{p^k}(1+T).
IntPoly cyclotomic_pp(long k, long p);

struct HalfLog {
    IntPoly poly;
    // Number of divisions by p not applied to poly.
    long pending = 0;
};

// Product of Phi_{p^k}(1+T) over 1 <= k <= n with k even (Plus) or odd (Minus).
HalfLog half_log_truncation(Sign sign, long n, long p);

}  // namespace iwa
