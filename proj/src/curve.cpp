#include "iwa/curve.hpp"

#include "iwa/error.hpp"
#include "iwa/quad_field.hpp"

#include <algorithm>
#include <sstream>

namespace iwa {

const char* reduction_name(Reduction r) {
    switch (r) {
    case Reduction::Good: return "good";
    case Reduction::SplitMultiplicative: return "split_multiplicative";
    case Reduction::NonsplitMultiplicative: return "nonsplit_multiplicative";
    case Reduction::Additive: return "additive";
    }
    return "unknown";
}

namespace {

BigInt exact_half(const BigInt& x) {
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), x.get_mpz_t(), 2);
    return q;
}

AInvariants reduced_form(AInvariants a) {
    BigInt a1 = a[0] % 2;
    if (a1 < 0) a1 += 2;
    a = rst_transform(a, 0, exact_half(a1 - a[0]), 0);
    BigInt m = a[1] % 3;
    if (m < 0) m += 3;
    BigInt target = m == 2 ? BigInt(-1) : m;
    BigInt r;
    mpz_divexact_ui(r.get_mpz_t(), BigInt(target - a[1]).get_mpz_t(), 3);
    a = rst_transform(a, r, 0, 0);
    BigInt a3 = a[2] % 2;
    if (a3 < 0) a3 += 2;
    return rst_transform(a, 0, 0, exact_half(a3 - a[2]));
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(long a1, long a2, long a3, long a4, long a6)
    : WeierstrassCurve(AInvariants{a1, a2, a3, a4, a6}) {}

WeierstrassCurve::WeierstrassCurve(const AInvariants& a_in, const std::vector<long>& hint_primes) : a_(a_in) {
    auto compute = [this] {
        const auto& [a1, a2, a3, a4, a6] = a_;
        b2_ = a1 * a1 + 4 * a2;
        b4_ = 2 * a4 + a1 * a3;
        b6_ = a3 * a3 + 4 * a6;
        b8_ = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        c4_ = b2_ * b2_ - 24 * b4_;
        c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
        disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
    };
    compute();
    if (disc_ == 0) fail(ErrorKind::InvalidInput, "singular Weierstrass equation");
    std::vector<long> hints = hint_primes;
    hints.push_back(2);
    hints.push_back(3);
    for (auto& [q, e] : factor(disc_, hints)) {
        long ell = to_long(q);
        TateResult tr = tate(a_, ell);
        a_ = tr.model;
        if (tr.data.conductor_exponent > 0) local_.push_back(tr.data);
    }
    a_ = reduced_form(a_);
    compute();
    conductor_ = 1;
    for (auto& ld : local_) {
        for (int i = 0; i < ld.conductor_exponent; ++i) {
            if (conductor_ > (1L << 62) / ld.prime) fail(ErrorKind::ResourceLimit, "conductor exceeds 64 bits");
            conductor_ *= ld.prime;
        }
    }
}

const LocalData* WeierstrassCurve::local_data_at(long ell) const {
    for (auto& ld : local_) {
        if (ld.prime == ell) return &ld;
    }
    return nullptr;
}

std::vector<long> WeierstrassCurve::bad_primes() const {
    std::vector<long> out;
    for (auto& ld : local_) out.push_back(ld.prime);
    return out;
}

std::string WeierstrassCurve::to_string() const {
    std::ostringstream os;
    os << "[" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3] << "," << a_[4] << "]";
    return os.str();
}

long ap(const WeierstrassCurve& E, long ell) {
    if (!is_prime(ell)) fail(ErrorKind::InvalidInput, "ap needs a prime");
    if (E.local_data_at(ell)) fail(ErrorKind::BadReduction, std::to_string(ell) + " divides the conductor");
    auto r = [ell](const BigInt& x) {
        BigInt m;
        mpz_fdiv_r_ui(m.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(ell));
        return m.get_si();
    };
    if (ell == 2) {
        const auto& a = E.ainvs();
        long a1 = r(a[0]), a2 = r(a[1]), a3 = r(a[2]), a4 = r(a[3]), a6 = r(a[4]);
        long count = 1;
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y)
                if ((y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6) % 2 == 0) ++count;
        return ell + 1 - count;
    }
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    std::vector<signed char> chi(static_cast<std::size_t>(ell), -1);
    chi[0] = 0;
    for (long x = 1; x < ell; ++x) chi[static_cast<std::size_t>(x * x % ell)] = 1;
    long b2 = r(E.b2()), b4 = r(E.b4()), b6 = r(E.b6());
    long sum = 0;
    for (long x = 0; x < ell; ++x) {
        long g = ((((4 * x + b2) % ell) * x % ell + 2 * b4) % ell * x + b6) % ell;
        sum += chi[static_cast<std::size_t>(g)];
    }
    return -sum;
}

long ap_any(const WeierstrassCurve& E, long ell) {
    const LocalData* ld = E.local_data_at(ell);
    if (!ld) return ap(E, ell);
    switch (ld->reduction) {
    case Reduction::SplitMultiplicative: return 1;
    case Reduction::NonsplitMultiplicative: return -1;
    default: return 0;
    }
}

std::vector<long> an_list(const WeierstrassCurve& E, long nmax) {
    std::vector<long> a(static_cast<std::size_t>(std::max(nmax, 1L)) + 1, 0);
    a[1] = 1;
    std::vector<long> spf(a.size(), 0);
    for (long i = 2; i <= nmax; ++i) {
        if (spf[i]) continue;
        for (long j = i; j <= nmax; j += i)
            if (!spf[j]) spf[j] = i;
    }
    for (long n = 2; n <= nmax; ++n) {
        long q = spf[n];
        long m = n, pk = 1;
        while (m % q == 0) {
            m /= q;
            pk *= q;
        }
        if (m > 1) {
            a[n] = a[m] * a[pk];
            continue;
        }
        // n = q^k
        if (n == q) {
            a[n] = ap_any(E, q);
        } else if (E.local_data_at(q)) {
            a[n] = a[n / q] * a[q];
        } else {
            a[n] = a[q] * a[n / q] - q * a[n / q / q];
        }
    }
    return a;
}

LocalData tate_local(const WeierstrassCurve& E, long ell, int residue_degree) {
    return tate(E.ainvs(), ell, residue_degree).data;
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, long D) {
    if (!is_fundamental_discriminant(D) && D != 1) fail(ErrorKind::InvalidInput, "twist needs a fundamental discriminant");
    BigInt d = D;
    AInvariants a{0, 0, 0, -27 * d * d * E.c4(), -54 * d * d * d * E.c6()};
    std::vector<long> hints = E.bad_primes();
    if (D != 1) {
        for (auto& [q, e] : factor(D)) hints.push_back(q);
    }
    return WeierstrassCurve(a, hints);
}

bool is_non_anomalous(const WeierstrassCurve& E, long p, long D) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidInput, "p must be an odd prime");
    if (D % p == 0) fail(ErrorKind::RamifiedPrime, std::to_string(p) + " ramifies in K");
    long a = ap(E, p);
    if (mod(a, p) == 0) fail(ErrorKind::SupersingularInput, "a_p divisible by p");
    if (kronecker(D, p) == 1) return mod(a - 1, p) != 0;
    return mod(a * a - 1, p) != 0;
}

std::vector<PlaceTamagawa> tamagawa_over_K(const WeierstrassCurve& E, long D) {
    std::vector<PlaceTamagawa> out;
    for (auto& ld : E.local_data()) {
        int k = kronecker(D, ld.prime);
        if (k == 0) fail(ErrorKind::RamifiedBadPrime, std::to_string(ld.prime) + " divides both N and D");
        if (k == 1) {
            out.push_back({ld.prime, 2, ld.tamagawa});
        } else {
            out.push_back({ld.prime, 1, tate_local(E, ld.prime, 2).tamagawa});
        }
    }
    return out;
}

bool tamagawa_p_indivisible_over_K(const WeierstrassCurve& E, long D, long p) {
    for (auto& t : tamagawa_over_K(E, D)) {
        if (t.tamagawa % p == 0) return false;
    }
    return true;
}

std::optional<long> torsion_witness(const WeierstrassCurve& E, long p) {
    for (long ell : primes_up_to(1000)) {
        if (ell == p || E.local_data_at(ell)) continue;
        if ((ell + 1 - ap(E, ell)) % p != 0) return ell;
    }
    return std::nullopt;
}

bool torsion_p_trivial(const WeierstrassCurve& E, long p) { return torsion_witness(E, p).has_value(); }

}  // namespace iwa
