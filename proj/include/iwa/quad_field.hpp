#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace iwa {

int kronecker(long D, long m);
bool is_fundamental_discriminant(long D);
// Discriminant of Q(sqrt(-d)) for squarefree d > 0.
long discriminant_of(long d);

class ImagQuadField {
public:
    // K = Q(sqrt(-d)), d squarefree and positive.
    explicit ImagQuadField(long d);

    long d() const { return d_; }
    long discriminant() const { return D_; }
    long class_number() const;
    // 1 split, -1 inert, 0 ramified.
    int splitting(long ell) const { return kronecker(D_, ell); }
    std::string name() const;

private:
    long d_;
    long D_;
    struct Memo {
        std::once_flag once;
        long h = 0;
    };
    std::shared_ptr<Memo> memo_;
};

// Reduced primitive forms (a, b, c) of discriminant D < 0.
std::vector<std::tuple<long, long, long>> reduced_forms(long D);
long class_number(long D);

// True certifies total ramification of the primes above p in the anticyclotomic Z_p-extension.
bool anticyclotomic_totally_ramified(const ImagQuadField& K, long p);

enum class HeegnerClass { StrictHeegner, GeneralizedHeegner, Fails };

const char* heegner_class_name(HeegnerClass c);

struct HeegnerFactorization {
    long N_plus = 1;
    long N_minus = 1;
    HeegnerClass classification = HeegnerClass::Fails;
    // (prime, exponent, kronecker(D, prime))
    std::vector<std::tuple<long, int, int>> primes;
    std::string reason;
};

HeegnerFactorization heegner_factorization(long N, const ImagQuadField& K);

int root_number_over_K(long N, const ImagQuadField& K);

}  // namespace iwa
