#pragma once

namespace iwa {

struct RunConfig {
    long depth = 3;             // n: Mazur-Tate level
    long coeff_prec = 4;        // M: digits claimed for T^k, k >= 1
    long constant_digits = 33;  // digits claimed for the constant term
    int numeric_digits = 60;    // L-values and periods
    long index_bound = 100000;  // largest allowed [SL2(Z) : Gamma_0(N)]
    long max_terms = 64;        // series coefficients emitted
    unsigned threads = 0;       // 0: hardware concurrency

    bool operator==(const RunConfig&) const = default;
};

// Throws InvalidInput on out-of-range settings.
void validate(const RunConfig& cfg);

}  // namespace iwa
