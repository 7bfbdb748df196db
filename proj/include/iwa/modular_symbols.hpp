#pragma once

#include "iwa/curve.hpp"
#include "iwa/nt.hpp"
#include "iwa/p1list.hpp"
#include "iwa/polynomial.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace iwa {

using RatMatrix = std::vector<std::vector<BigRational>>;

// Rational basis of the columns spanning the kernel of A (rows x cols).
RatMatrix nullspace(const RatMatrix& A, std::size_t cols);

using Mat2 = std::array<long, 4>;  // [a, b, c, d]

// Matrices [[a,b],[c,d]] of determinant ell with a > b >= 0 and d > c >= 0.
std::vector<Mat2> heilbronn_merel(long ell);

// Weight-2 modular symbols for Gamma_0(N), presented by Manin symbols (c:d) in P^1(Z/N).
// Functionals are stored by their values on every Manin symbol.
class ManinSymbolSpace {
public:
    static std::shared_ptr<const ManinSymbolSpace> build(long N, long index_bound = 100000);

    long level() const { return p1_.level(); }
    const P1List& p1() const { return p1_; }
    std::size_t index() const { return p1_.size(); }
    // Dimension of the space of functionals killed by the Manin relations.
    std::size_t dimension() const { return free_.size(); }

    long s_image(long i) const;
    long tau_image(long i) const;
    long tau2_image(long i) const;
    long star_image(long i) const;

    // Values of basis functional j on symbol i.
    const BigRational& basis_value(std::size_t j, long i) const { return basis_[j][i]; }
    // Coordinates of a functional are its values on these symbols.
    const std::vector<long>& coordinate_symbols() const { return free_; }
    // Values on all symbols of the functional with the given coordinates.
    std::vector<BigRational> values_from_coordinates(const std::vector<BigRational>& x) const;

    // Right action of the star involution and of T_ell on coordinates.
    RatMatrix star_matrix() const;
    RatMatrix hecke_matrix(long ell) const;

    explicit ManinSymbolSpace(long N);

private:
    P1List p1_;
    std::vector<long> free_;
    RatMatrix basis_;
};

struct SymbolProvenance {
    std::vector<long> matched_primes;
    long auxiliary_discriminant = 0;
    BigRational anchor_value = 0;
    int root_number = 0;
};

// A +/- eigen-functional; values [a/m] = scale * (integral functional)({a/m, oo}).
class ModularSymbol {
public:
    ModularSymbol(std::shared_ptr<const ManinSymbolSpace> space, Sign sign, std::vector<long> values,
                  BigRational scale, SymbolProvenance prov);

    long level() const { return space_->level(); }
    Sign sign() const { return sign_; }
    const BigRational& scale() const { return scale_; }
    const std::vector<long>& integral_values() const { return values_; }
    const ManinSymbolSpace& space() const { return *space_; }
    std::shared_ptr<const ManinSymbolSpace> space_ptr() const { return space_; }
    const SymbolProvenance& provenance() const { return prov_; }
    // Denominator bound for all values.
    BigInt global_denominator() const { return scale_.get_den(); }

    long eval_integral(long a, long m) const;
    BigRational eval(long a, long m) const { return scale_ * eval_integral(a, m); }
    // sum_{u mod |D|} kron(D, u) [(a|D| + u m)/(m|D|)], unscaled.
    long eval_twisted_integral(long a, long m, long D) const;

    ModularSymbol with_scale(BigRational scale, SymbolProvenance prov) const;

private:
    std::shared_ptr<const ManinSymbolSpace> space_;
    Sign sign_;
    std::vector<long> values_;
    BigRational scale_;
    SymbolProvenance prov_;
};

ModularSymbol eigen_symbol(std::shared_ptr<const ManinSymbolSpace> space, const WeierstrassCurve& E, Sign sign,
                           long hecke_bound = 200);

// w(E) = -(eigenvalue of the Fricke involution).
int fricke_sign(const ModularSymbol& symbol);

// sum_{u mod |D|} kron(D, u) [u/|D|]; D = 1 gives [0].
BigRational algebraic_L_ratio(const ModularSymbol& symbol, long D);
long twisted_sum_integral(const ModularSymbol& symbol, long D);

ModularSymbol normalize(const ModularSymbol& symbol, const WeierstrassCurve& E, int digits = 60);

// Lazily built, normalized plus and minus symbols of a curve. Thread safe.
class CurveSymbols {
public:
    explicit CurveSymbols(WeierstrassCurve E, long index_bound = 100000, int digits = 60);

    const WeierstrassCurve& curve() const { return E_; }
    const ModularSymbol& plus() const;
    const ModularSymbol& minus() const;
    const ModularSymbol& symbol(Sign s) const { return s == Sign::Plus ? plus() : minus(); }
    int root_number() const { return plus().provenance().root_number; }
    // Sign matching the parity of kron(D, .).
    static Sign sign_for(long D) { return D < 0 ? Sign::Minus : Sign::Plus; }

private:
    std::shared_ptr<const ManinSymbolSpace> space() const;
    const ModularSymbol& get(int slot) const;

    WeierstrassCurve E_;
    long index_bound_;
    int digits_;
    struct State {
        std::once_flag space_once;
        std::shared_ptr<const ManinSymbolSpace> space;
        std::once_flag once[2];
        std::unique_ptr<ModularSymbol> sym[2];
    };
    std::shared_ptr<State> state_;
};

}  // namespace iwa
