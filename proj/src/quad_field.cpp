#include "iwa/quad_field.hpp"

#include "iwa/error.hpp"
#include "iwa/nt.hpp"

#include <tuple>

namespace iwa {

int kronecker(long D, long m) { return mpz_si_kronecker(D, BigInt(m).get_mpz_t()); }

bool is_fundamental_discriminant(long D) {
    if (D == 0 || D == 1) return false;
    long r = mod(D, 4);
    if (r == 1) return is_squarefree(D < 0 ? -D : D);
    if (r != 0) return false;
    long q = D / 4;
    long s = mod(q, 4);
    return (s == 2 || s == 3) && is_squarefree(q < 0 ? -q : q);
}

long discriminant_of(long d) {
    if (d <= 0 || !is_squarefree(d)) fail(ErrorKind::InvalidInput, "d must be a positive squarefree integer");
    return mod(-d, 4) == 1 ? -d : -4 * d;
}

ImagQuadField::ImagQuadField(long d) : d_(d), D_(discriminant_of(d)), memo_(std::make_shared<Memo>()) {}

long ImagQuadField::class_number() const {
    std::call_once(memo_->once, [this] { memo_->h = iwa::class_number(D_); });
    return memo_->h;
}

std::string ImagQuadField::name() const { return "Q(sqrt(-" + std::to_string(d_) + "))"; }

std::vector<std::tuple<long, long, long>> reduced_forms(long D) {
    if (D >= 0 || mod(D, 4) > 1) fail(ErrorKind::InvalidInput, "negative discriminant expected");
    std::vector<std::tuple<long, long, long>> out;
    for (long a = 1; 3 * a * a <= -D; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (gcd(gcd(a, b < 0 ? -b : b), c) != 1) continue;
            out.emplace_back(a, b, c);
        }
    }
    return out;
}

long class_number(long D) { return static_cast<long>(reduced_forms(D).size()); }

bool anticyclotomic_totally_ramified(const ImagQuadField& K, long p) {
    if (K.splitting(p) != 1) fail(ErrorKind::NonSplitPrime, std::to_string(p) + " does not split in " + K.name());
    return K.class_number() % p != 0;
}

const char* heegner_class_name(HeegnerClass c) {
    switch (c) {
    case HeegnerClass::StrictHeegner: return "strict_heegner";
    case HeegnerClass::GeneralizedHeegner: return "generalized_heegner";
    case HeegnerClass::Fails: return "fails";
    }
    return "unknown";
}

HeegnerFactorization heegner_factorization(long N, const ImagQuadField& K) {
    if (N < 1) fail(ErrorKind::InvalidInput, "conductor must be positive");
    HeegnerFactorization h;
    bool ramified = false, square = false;
    int inert = 0;
    if (N > 1) {
        for (auto& [q, e] : factor(N)) {
            int k = K.splitting(q);
            h.primes.emplace_back(q, e, k);
            long qe = 1;
            for (int i = 0; i < e; ++i) qe *= q;
            if (k == 0) {
                ramified = true;
            } else if (k == 1) {
                h.N_plus *= qe;
            } else {
                h.N_minus *= qe;
                ++inert;
                if (e > 1) square = true;
            }
        }
    }
    if (ramified) {
        h.reason = "a prime dividing N ramifies in K";
    } else if (square) {
        h.reason = "N- is not squarefree";
    } else if (inert % 2) {
        h.reason = "odd number of inert primes";
    } else {
        h.classification = h.N_minus == 1 ? HeegnerClass::StrictHeegner : HeegnerClass::GeneralizedHeegner;
    }
    return h;
}

int root_number_over_K(long N, const ImagQuadField& K) {
    if (gcd(N, K.discriminant()) != 1) fail(ErrorKind::RamifiedBadPrime, "gcd(N, D) > 1");
    int w = kronecker(K.discriminant(), -N);
    if (w != -kronecker(K.discriminant(), N)) fail(ErrorKind::InvalidInput, "Kronecker symbol inconsistency");
    if (heegner_factorization(N, K).classification != HeegnerClass::Fails && w != -1) {
        fail(ErrorKind::InvalidInput, "Heegner-type factorization with root number +1");
    }
    return w;
}

}  // namespace iwa
