#include "iwa/p1list.hpp"

#include "iwa/error.hpp"
#include "iwa/nt.hpp"

#include <algorithm>

namespace iwa {

namespace {

constexpr long kDenseLimit = 1500;

long xgcd(long a, long b, long* s) {
    long s0 = 1, s1 = 0, r0 = a, r1 = b;
    while (r1 != 0) {
        long q = r0 / r1;
        long t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    *s = s0;
    return r0;
}

}  // namespace

std::pair<long, long> P1List::normalize(long u, long v) const {
    const long N = N_;
    if (N == 1) return {0, 0};
    u = mod(u, N);
    v = mod(v, N);
    if (u == 0) {
        return gcd(v, N) == 1 ? std::pair<long, long>{0, 1} : std::pair<long, long>{0, 0};
    }
    long s;
    long g = xgcd(u, N, &s);
    s = mod(s, N);
    if (gcd(g, v) != 1) return {0, 0};
    if (g != 1) {
        long d = N / g;
        while (gcd(s, N) != 1) s = (s + d) % N;
    }
    u = g;
    v = static_cast<long>(static_cast<__int128>(s) * v % N);
    long min_v = v;
    if (g != 1) {
        long Ng = N / g;
        long vNg = static_cast<long>(static_cast<__int128>(v) * Ng % N);
        long t = 1;
        for (long k = 2; k <= g; ++k) {
            v = (v + vNg) % N;
            t = (t + Ng) % N;
            if (v < min_v && gcd(t, N) == 1) min_v = v;
        }
    }
    return {u, min_v};
}

P1List::P1List(long N) : N_(N) {
    if (N < 1) fail(ErrorKind::InvalidInput, "level must be positive");
    if (N == 1) {
        list_.push_back({0, 0});
        return;
    }
    std::vector<long> divisors;
    for (long g = 1; g <= N; ++g)
        if (N % g == 0) divisors.push_back(g);
    for (long g : divisors) {
        long first = g == N ? 0 : g;
        for (long v = 0; v < N; ++v) {
            auto [a, b] = normalize(first, v);
            if (a == 0 && b == 0) continue;
            std::int64_t key = static_cast<std::int64_t>(a) * N + b;
            if (lookup_.emplace(key, static_cast<long>(list_.size())).second) list_.push_back({a, b});
        }
    }
    if (N <= kDenseLimit) {
        dense_.assign(static_cast<std::size_t>(N * N), -1);
        for (long u = 0; u < N; ++u) {
            for (long v = 0; v < N; ++v) {
                auto [a, b] = normalize(u, v);
                if (a == 0 && b == 0) continue;
                dense_[static_cast<std::size_t>(u * N + v)] =
                    static_cast<std::int32_t>(lookup_.at(static_cast<std::int64_t>(a) * N + b));
            }
        }
    }
}

long P1List::index(long u, long v) const {
    if (N_ == 1) return 0;
    u = mod(u, N_);
    v = mod(v, N_);
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(u * N_ + v)];
    auto [a, b] = normalize(u, v);
    if (a == 0 && b == 0) return -1;
    auto it = lookup_.find(static_cast<std::int64_t>(a) * N_ + b);
    return it == lookup_.end() ? -1 : it->second;
}

long p1_size_formula(long N) {
    long r = N;
    if (N == 1) return 1;
    for (auto& [q, e] : factor(N)) r = r / q * (q + 1);
    return r;
}

}  // namespace iwa
