#include "iwa/nt.hpp"

#include "iwa/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace iwa {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long gcd(long a, long b) { return std::gcd(a, b); }

static std::uint64_t mulmod_u(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

static std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u(r, b, m);
        b = mulmod_u(b, b, m);
        e >>= 1;
    }
    return r;
}

long powmod(long base, long exp, long m) {
    if (exp < 0) return powmod(invmod(base, m), -exp, m);
    return static_cast<long>(powmod_u(static_cast<std::uint64_t>(mod(base, m)), static_cast<std::uint64_t>(exp),
                                      static_cast<std::uint64_t>(m)));
}

long invmod(long a, long m) {
    long t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) fail(ErrorKind::InvalidInput, "invmod: not invertible");
    return mod(t, m);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n) - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u(a, d, static_cast<std::uint64_t>(n));
        if (x == 1 || x == static_cast<std::uint64_t>(n) - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u(x, x, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n) - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    for (long i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

long isqrt(long n) {
    if (n < 0) fail(ErrorKind::InvalidInput, "isqrt of negative");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), BigInt(n).get_mpz_t());
    return r.get_si();
}

bool is_squarefree(long n) {
    for (auto& [q, e] : factor(n)) {
        if (e > 1) return false;
    }
    return n != 0;
}

std::vector<std::pair<long, int>> factor(long n) {
    if (n == 0) fail(ErrorKind::InvalidInput, "factor(0)");
    std::vector<std::pair<long, int>> out;
    for (auto& [q, e] : factor(BigInt(n))) out.emplace_back(q.get_si(), e);
    return out;
}

namespace {

BigInt pollard_rho(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto f = [&](const BigInt& v) {
            BigInt r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            BigInt diff = x - y;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void split(const BigInt& n, std::vector<BigInt>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out.push_back(n);
        return;
    }
    BigInt d = pollard_rho(n);
    split(d, out);
    split(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factor(const BigInt& n_in, const std::vector<long>& hints) {
    if (n_in == 0) fail(ErrorKind::InvalidInput, "factor(0)");
    BigInt n = abs(n_in);
    std::vector<BigInt> primes;
    auto strip = [&](const BigInt& q) {
        while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
            primes.push_back(q);
            n /= q;
        }
    };
    for (long h : hints) {
        if (h > 1 && is_prime(h)) strip(BigInt(h));
    }
    for (long q = 2; q < 10000; ++q) {
        if (n == 1) break;
        if (q * q > n) break;
        strip(BigInt(q));
    }
    std::vector<BigInt> rest;
    split(n, rest);
    primes.insert(primes.end(), rest.begin(), rest.end());
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<BigInt, int>> out;
    for (auto& q : primes) {
        if (!out.empty() && out.back().first == q) {
            ++out.back().second;
        } else {
            out.emplace_back(q, 1);
        }
    }
    return out;
}

long valuation(const BigInt& x, long p) {
    if (x == 0) return kInfinity;
    BigInt y = x;
    long v = 0;
    while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

long valuation(const BigRational& x, long p) {
    if (x == 0) return kInfinity;
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

BigInt ipow(long p, long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

bool fits_long(const BigInt& x) { return x.fits_slong_p(); }

long to_long(const BigInt& x) {
    if (!x.fits_slong_p()) fail(ErrorKind::ResourceLimit, "integer exceeds 64 bits: " + x.get_str());
    return x.get_si();
}

BigRational best_rational(const BigRational& x, long bound) {
    BigInt num = x.get_num(), den = x.get_den();
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    while (den != 0) {
        BigInt a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        BigInt q2 = a * q1 + q0;
        if (q2 > bound) break;
        BigInt p2 = a * p1 + p0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        BigInt r = num - a * den;
        num = den;
        den = r;
    }
    BigRational out(p1, q1);
    out.canonicalize();
    return out;
}

}  // namespace iwa
