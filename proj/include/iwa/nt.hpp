#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace iwa {

using BigInt = mpz_class;
using BigRational = mpq_class;

constexpr long kInfinity = 1L << 60;

long mod(long a, long m);
long gcd(long a, long b);
long powmod(long base, long exp, long m);
// Inverse of a modulo m; requires gcd(a, m) = 1.
long invmod(long a, long m);
bool is_prime(long n);
std::vector<long> primes_up_to(long n);
long isqrt(long n);
bool is_squarefree(long n);

// Factorization of |n| for n != 0, ascending primes.
std::vector<std::pair<long, int>> factor(long n);
std::vector<std::pair<BigInt, int>> factor(const BigInt& n, const std::vector<long>& hints = {});

// p-adic valuation of a nonzero integer or rational.
long valuation(const BigInt& x, long p);
long valuation(const BigRational& x, long p);
BigInt ipow(long p, long e);

bool fits_long(const BigInt& x);
long to_long(const BigInt& x);

// Best rational approximation of num/den by continued fractions with denominator <= bound.
BigRational best_rational(const BigRational& x, long bound);

}  // namespace iwa
