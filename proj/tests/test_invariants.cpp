#include "iwa/invariants.hpp"
#include "iwa/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace iwa;

namespace {

struct Planted {
    IntPoly f;
    long mu, lambda;
};

// p^mu * P(T) * U(T): P distinguished of degree lambda, U a unit series.
Planted plant(std::mt19937_64& rng, long p, long len) {
    long mu = static_cast<long>(rng() % 3);
    long lambda = static_cast<long>(rng() % 6);
    IntPoly P(lambda + 1);
    for (long i = 0; i < lambda; ++i) P[i] = p * (static_cast<long>(rng() % 50) - 25);
    P[lambda] = 1;
    IntPoly U(len);
    for (long i = 0; i < len; ++i) U[i] = static_cast<long>(rng() % 100) - 50;
    while (mod(to_long(U[0]), p) == 0) U[0] += 1;
    IntPoly f = poly_mul(P, U);
    f.resize(len);
    for (auto& c : f) c *= ipow(p, mu);
    return {f, mu, lambda};
}

PAdicSeries unit_series(std::mt19937_64& rng, long p, long len, long cap) {
    IntPoly u(len);
    for (long i = 0; i < len; ++i) u[i] = static_cast<long>(rng() % 1000) - 500;
    while (mod(to_long(u[0]), p) == 0) u[0] += 1;
    return PAdicSeries::from_polynomial(u, p, cap);
}

std::vector<PAdicNumber> ints(std::initializer_list<long> xs, long p, long cap) {
    std::vector<PAdicNumber> v;
    for (long x : xs) v.push_back(PAdicNumber::from_integer(x, p, cap));
    return v;
}

}  // namespace

TEST_CASE("Weierstrass degree of a small example") {
    const long p = 7;
    PAdicSeries s(p, ints({7 * 3, 7 * 5, 2, 11, 49}, p, 6));
    auto r = mu_lambda(s);
    CHECK(r.reliable);
    CHECK(r.mu == 0);
    CHECK(r.lambda == 2);
    CHECK(r.ord_T_lower == 0);

    PAdicSeries t(p, ints({49, 7 * 3, 14, 7}, p, 6));
    auto q = mu_lambda(t);
    CHECK(q.mu == 1);
    CHECK(q.lambda == 1);
}

TEST_CASE("planted Weierstrass products") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        long p = trial % 2 ? 5 : 7;
        auto pl = plant(rng, p, 12);
        auto r = mu_lambda(PAdicSeries::from_polynomial(pl.f, p, 12));
        CAPTURE(trial);
        CHECK(r.reliable);
        CHECK(r.mu == pl.mu);
        CHECK(r.lambda == pl.lambda);
    }
}

TEST_CASE("invariants survive multiplication by units") {
    std::mt19937_64 rng(99);
    const long p = 5;
    auto pl = plant(rng, p, 10);
    auto base = PAdicSeries::from_polynomial(pl.f, p, 14);
    auto ref = mu_lambda(base);
    REQUIRE(ref.reliable);
    for (int trial = 0; trial < 100; ++trial) {
        auto r = mu_lambda(base * unit_series(rng, p, 10, 14));
        CHECK(r.reliable);
        CHECK(r.mu == ref.mu);
        CHECK(r.lambda == ref.lambda);
    }
}

TEST_CASE("ord_T lower bound") {
    const long p = 3;
    CHECK(ord_T_lower_bound(PAdicSeries(p, ints({0, 0, 4, 1}, p, 5))) == 2);
    // 27 vanishes to precision 3 and counts.
    CHECK(ord_T_lower_bound(PAdicSeries(p, ints({27, 0, 1}, p, 3))) == 2);
    CHECK(ord_T_lower_bound(PAdicSeries(p, ints({1, 0}, p, 5))) == 0);
    CHECK(ord_T_lower_bound(PAdicSeries(p, ints({0, 0}, p, 5))) == 2);
}

TEST_CASE("lowering precision never changes a reliable answer") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const long p = 3;
        auto pl = plant(rng, p, 10);
        for (long cap = 1; cap <= 8; ++cap) {
            auto r = mu_lambda(PAdicSeries::from_polynomial(pl.f, p, cap));
            if (!r.reliable) {
                CHECK_FALSE(r.reason.empty());
                continue;
            }
            CHECK(r.mu == pl.mu);
            CHECK(r.lambda == pl.lambda);
        }
        auto full = mu_lambda(PAdicSeries::from_polynomial(pl.f, p, 8));
        CHECK(full.reliable);
    }
}

TEST_CASE("unreliable cases are flagged") {
    const long p = 5;
    auto zeros = mu_lambda(PAdicSeries(p, ints({25, 125, 0}, p, 2)));
    CHECK_FALSE(zeros.reliable);
    CHECK(zeros.mu_lower_bound);
    CHECK(zeros.mu == 2);
    CHECK_FALSE(zeros.lambda.has_value());

    // T^0 is only known to vanish mod 5 while T^1 has valuation 1.
    std::vector<PAdicNumber> c{PAdicNumber::zero(p, 1), PAdicNumber::from_integer(5, p, 4),
                               PAdicNumber::from_integer(10, p, 4)};
    auto early = mu_lambda(PAdicSeries(p, c));
    CHECK_FALSE(early.reliable);
    CHECK_FALSE(early.lambda.has_value());
    c[0] = PAdicNumber::zero(p, 2);
    CHECK(mu_lambda(PAdicSeries(p, c)).lambda == 1);

    // A later coefficient with too little precision may hide a smaller valuation.
    std::vector<PAdicNumber> d{PAdicNumber::from_integer(25, p, 4), PAdicNumber::zero(p, 1)};
    auto late = mu_lambda(PAdicSeries(p, d));
    CHECK_FALSE(late.reliable);
    CHECK(late.mu_lower_bound);

    // Level 1 at p = 5 only trusts T^0..T^3.
    PAdicSeries windowed(p, ints({5, 5, 5, 5, 1}, p, 4), 1);
    auto w = mu_lambda(windowed);
    CHECK_FALSE(w.reliable);
    CHECK_FALSE(w.lambda.has_value());
    PAdicSeries inside(p, ints({5, 1, 5, 5, 1}, p, 4), 1);
    CHECK(mu_lambda(inside).lambda == 1);

    CHECK_FALSE(mu_lambda(PAdicSeries(p, {})).reliable);
}
