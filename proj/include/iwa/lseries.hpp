#pragma once

#include "iwa/config.hpp"
#include "iwa/modular_symbols.hpp"
#include "iwa/padic_series.hpp"
#include "iwa/quad_ext.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace iwa {

// theta_n in Q[G_n], G_n = <gamma> mod p^(n+1) of order p^n; n = -1 is the trivial group.
struct MazurTateElement {
    long p = 0;
    long n = 0;
    long twist_D = 1;
    long gamma = 0;
    Sign sign = Sign::Plus;
    BigRational scale = 1;
    std::vector<BigInt> integral;  // coefficient j is scale * integral[j], attached to gamma^j

    std::size_t size() const { return integral.size(); }
    BigRational coefficient(std::size_t j) const { return scale * integral[j]; }
    BigRational total() const;
    // Image in G_(n-1) by summing over fibers.
    MazurTateElement project() const;
};

// gamma = 0 selects 1 + p.
MazurTateElement mazur_tate(const ModularSymbol& symbol, long p, long n, long twist_D = 1, long gamma = 0);

// a_p of the twist by D: kron(D, p) a_p(E).
long twisted_ap(const WeierstrassCurve& E, long p, long D);

struct StabilizedElement {
    long p = 0;
    long n = 0;
    long twist_D = 1;
    long gamma = 0;
    PAdicNumber alpha;
    BigRational scale = 1;
    long modulus_exp = 0;          // integral coefficients are known mod p^modulus_exp
    std::vector<BigInt> integral;  // coefficient j = scale * integral[j]
    PAdicNumber constant;          // total mass, from exact rational sums
    bool norm_compatible = false;
};

// alpha^-(n+1) theta_n - alpha^-(n+2) nu(theta_(n-1)). Requires v_p(alpha) = 0.
StabilizedElement stabilize_ordinary(const MazurTateElement& theta_n, const MazurTateElement& theta_nm1,
                                     const PAdicNumber& alpha, long modulus_exp, long constant_digits);

// Builds theta_n, theta_(n-1), theta_(n-2), stabilizes at levels n and n-1 and certifies
// norm compatibility (throws NormCompatibilityFailed otherwise).
StabilizedElement stabilized_element(const ModularSymbol& symbol, const WeierstrassCurve& E, long p, long n,
                                     long twist_D, const RunConfig& cfg, long gamma = 0,
                                     std::optional<PAdicNumber> alpha_override = std::nullopt);

// Guard schedule: digits of coefficient k determined by data modulo omega_n.
long omega_guard(long n, long p, long k);

PAdicSeries to_series(const StabilizedElement& elem, long M, long max_terms);

// L_p of E (twist_D = 1) or of its quadratic twist, from the curve's symbols.
PAdicSeries ordinary_lseries(const CurveSymbols& cs, long p, long twist_D, const RunConfig& cfg, long gamma = 0);

struct QuadSeries {
    long p = 0;
    long a_p = 0;
    long n = 0;
    std::vector<QuadExtElement> coeffs;  // modulo omega_n

    QuadSeries conj() const;
};

// Stabilizations at alpha and at its conjugate, for a_p = 0.
std::pair<QuadSeries, QuadSeries> lp_alpha_supersingular(const ModularSymbol& symbol, const WeierstrassCurve& E,
                                                         long p, long n, long twist_D, long M, long gamma = 0);

// (L+, L-) with L_alpha = L+ log+ + alpha L- log- modulo omega_n.
std::pair<PAdicSeries, PAdicSeries> pollack_decompose(const std::pair<QuadSeries, QuadSeries>& pair, long max_terms);

std::pair<PAdicSeries, PAdicSeries> signed_lseries(const CurveSymbols& cs, long p, long twist_D, const RunConfig& cfg,
                                                   long gamma = 0);

}  // namespace iwa
