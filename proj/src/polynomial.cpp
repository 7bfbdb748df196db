#include "iwa/polynomial.hpp"

#include "iwa/error.hpp"

#include <algorithm>

namespace iwa {

int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

const char* sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const IntPoly& f) {
    for (long i = static_cast<long>(f.size()) - 1; i >= 0; --i) {
        if (f[i] != 0) return i;
    }
    return -1;
}

IntPoly poly_add(const IntPoly& f, const IntPoly& g) {
    IntPoly r(std::max(f.size(), g.size()), BigInt(0));
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    trim(r);
    return r;
}

IntPoly poly_sub(const IntPoly& f, const IntPoly& g) {
    IntPoly r(std::max(f.size(), g.size()), BigInt(0));
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    trim(r);
    return r;
}

IntPoly poly_mul(const IntPoly& f, const IntPoly& g) {
    if (f.empty() || g.empty()) return {};
    IntPoly r(f.size() + g.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    }
    trim(r);
    return r;
}

IntPoly poly_scale(const IntPoly& f, const BigInt& c) {
    IntPoly r = f;
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

IntPoly poly_divmod(const IntPoly& f, const IntPoly& monic, IntPoly* remainder) {
    long dg = degree(monic);
    if (dg < 0 || monic[dg] != 1) fail(ErrorKind::InvalidInput, "divisor must be monic");
    IntPoly r = f;
    trim(r);
    long df = degree(r);
    IntPoly q;
    if (df >= dg) {
        q.assign(df - dg + 1, BigInt(0));
        for (long i = df; i >= dg; --i) {
            BigInt c = r[i];
            if (c == 0) continue;
            q[i - dg] = c;
            for (long j = 0; j <= dg; ++j) r[i - dg + j] -= c * monic[j];
        }
    }
    trim(r);
    trim(q);
    if (remainder) *remainder = r;
    return q;
}

IntPoly poly_mod(const IntPoly& f, const IntPoly& monic) {
    IntPoly r;
    poly_divmod(f, monic, &r);
    return r;
}

IntPoly shift_one(const IntPoly& f) {
    // Repeated synthetic division by (X - 1).
    IntPoly a = f;
    trim(a);
    IntPoly out;
    while (!a.empty()) {
        for (long i = static_cast<long>(a.size()) - 2; i >= 0; --i) a[i] += a[i + 1];
        out.push_back(a[0]);
        a.erase(a.begin());
    }
    trim(out);
    return out;
}

IntPoly omega(long n, long p) {
    if (n < 0) fail(ErrorKind::InvalidInput, "omega level must be nonnegative");
    BigInt e = ipow(p, n);
    long deg = to_long(e);
    IntPoly r(static_cast<std::size_t>(deg) + 1);
    for (long k = 1; k <= deg; ++k) {
        mpz_bin_uiui(r[k].get_mpz_t(), static_cast<unsigned long>(deg), static_cast<unsigned long>(k));
    }
    r[0] = 0;
    return r;
}

IntPoly cyclotomic_pp(long k, long p) {
    if (k < 1) fail(ErrorKind::InvalidInput, "cyclotomic index must be positive");
    IntPoly q = poly_divmod(omega(k, p), omega(k - 1, p), nullptr);
    return q;
}

HalfLog half_log_truncation(Sign sign, long n, long p) {
    if (n < 1) fail(ErrorKind::InvalidInput, "half_log_truncation needs n >= 1");
    HalfLog h;
    h.poly = {BigInt(1)};
    for (long k = 1; k <= n; ++k) {
        bool even = k % 2 == 0;
        if (even != (sign == Sign::Plus)) continue;
        h.poly = poly_mul(h.poly, cyclotomic_pp(k, p));
        ++h.pending;
    }
    return h;
}

}  // namespace iwa
