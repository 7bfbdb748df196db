#pragma once

#include "iwa/nt.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace iwa {

enum class Reduction { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

const char* reduction_name(Reduction r);

struct LocalData {
    long prime = 0;
    int conductor_exponent = 0;
    std::string kodaira = "I0";
    int tamagawa = 1;
    Reduction reduction = Reduction::Good;
    long discriminant_valuation = 0;
};

using AInvariants = std::array<BigInt, 5>;

struct TateResult {
    AInvariants model;  // minimal at the prime
    LocalData data;
};

// Tate's algorithm at prime ell. residue_degree 2 evaluates the component counts over the
// unramified quadratic extension of Q_ell.
TateResult tate(const AInvariants& a, long ell, int residue_degree = 1);

AInvariants rst_transform(const AInvariants& a, const BigInt& r, const BigInt& s, const BigInt& t);

class WeierstrassCurve {
public:
    // Any integral model; it is replaced by a global minimal model in reduced form.
    explicit WeierstrassCurve(const AInvariants& a, const std::vector<long>& hint_primes = {});
    WeierstrassCurve(long a1, long a2, long a3, long a4, long a6);

    const AInvariants& ainvs() const { return a_; }
    const BigInt& b2() const { return b2_; }
    const BigInt& b4() const { return b4_; }
    const BigInt& b6() const { return b6_; }
    const BigInt& b8() const { return b8_; }
    const BigInt& c4() const { return c4_; }
    const BigInt& c6() const { return c6_; }
    const BigInt& discriminant() const { return disc_; }
    long conductor() const { return conductor_; }
    const std::vector<LocalData>& local_data() const { return local_; }
    // Data at a bad prime, or nullptr when ell is a prime of good reduction.
    const LocalData* local_data_at(long ell) const;
    std::vector<long> bad_primes() const;
    std::string to_string() const;

private:
    AInvariants a_;
    BigInt b2_, b4_, b6_, b8_, c4_, c6_, disc_;
    long conductor_ = 1;
    std::vector<LocalData> local_;
};

// Trace of Frobenius at a prime of good reduction, by point enumeration.
long ap(const WeierstrassCurve& E, long ell);
// Coefficient of the L-series at a prime: a_ell when good, +1/-1/0 for split/nonsplit/additive.
long ap_any(const WeierstrassCurve& E, long ell);
// a_1..a_nmax of the L-series (index 0 unused).
std::vector<long> an_list(const WeierstrassCurve& E, long nmax);

LocalData tate_local(const WeierstrassCurve& E, long ell, int residue_degree = 1);
WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, long D);

bool is_non_anomalous(const WeierstrassCurve& E, long p, long D);

struct PlaceTamagawa {
    long ell;
    int places;   // number of places of K above ell
    int tamagawa; // c_v at each of them
};
std::vector<PlaceTamagawa> tamagawa_over_K(const WeierstrassCurve& E, long D);
bool tamagawa_p_indivisible_over_K(const WeierstrassCurve& E, long D, long p);

// A good prime ell <= 1000, ell != p, with p not dividing #E(F_ell), if one exists.
std::optional<long> torsion_witness(const WeierstrassCurve& E, long p);
bool torsion_p_trivial(const WeierstrassCurve& E, long p);

}  // namespace iwa
