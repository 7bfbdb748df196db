#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace iwa {

// The projective line P^1(Z/N) with a canonical representative per point.
class P1List {
public:
    explicit P1List(long N);

    long level() const { return N_; }
    std::size_t size() const { return list_.size(); }
    const std::pair<long, long>& operator[](std::size_t i) const { return list_[i]; }
    // Canonical representative of (u:v), or (0,0) when gcd(u, v, N) > 1.
    std::pair<long, long> normalize(long u, long v) const;
    // Index of (u:v), or -1 if it is not a point of P^1(Z/N).
    long index(long u, long v) const;

private:
    long N_;
    std::vector<std::pair<long, long>> list_;
    std::unordered_map<std::int64_t, long> lookup_;
    std::vector<std::int32_t> dense_;
};

// N * prod_{l | N} (1 + 1/l).
long p1_size_formula(long N);

}  // namespace iwa
