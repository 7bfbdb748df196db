#include "iwa/modular_symbols.hpp"

#include "iwa/analytic.hpp"
#include "iwa/error.hpp"
#include "iwa/quad_field.hpp"

#include <map>

namespace iwa {

RatMatrix nullspace(const RatMatrix& A_in, std::size_t cols) {
    RatMatrix A = A_in;
    std::vector<long> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < A.size(); ++c) {
        std::size_t sel = row;
        while (sel < A.size() && A[sel][c] == 0) ++sel;
        if (sel == A.size()) continue;
        std::swap(A[row], A[sel]);
        BigRational inv = 1 / A[row][c];
        for (auto& x : A[row]) x *= inv;
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == row || A[r][c] == 0) continue;
            BigRational f = A[r][c];
            for (std::size_t k = c; k < cols; ++k) A[r][k] -= f * A[row][k];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[c] = true;
    RatMatrix out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<BigRational> v(cols, BigRational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -A[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Mat2> heilbronn_merel(long ell) {
    std::vector<Mat2> out;
    for (long a = 1; a <= ell; ++a) {
        for (long d = 1; a + d <= ell + 1; ++d) {
            long bc = a * d - ell;
            if (bc < 0) continue;
            if (bc == 0) {
                for (long c = 0; c < d; ++c) out.push_back({a, 0, c, d});
                for (long b = 1; b < a; ++b) out.push_back({a, b, 0, d});
                continue;
            }
            for (long b = 1; b < a; ++b) {
                if (bc % b) continue;
                long c = bc / b;
                if (c < d) out.push_back({a, b, c, d});
            }
        }
    }
    return out;
}

std::shared_ptr<const ManinSymbolSpace> ManinSymbolSpace::build(long N, long index_bound) {
    if (N < 1) fail(ErrorKind::InvalidInput, "level must be positive");
    long idx = p1_size_formula(N);
    if (idx > index_bound) {
        fail(ErrorKind::ResourceLimit, "index " + std::to_string(idx) + " exceeds bound " + std::to_string(index_bound));
    }
    return std::make_shared<const ManinSymbolSpace>(N);
}

long ManinSymbolSpace::s_image(long i) const {
    auto [c, d] = p1_[i];
    return p1_.index(d, -c);
}

long ManinSymbolSpace::tau_image(long i) const {
    auto [c, d] = p1_[i];
    return p1_.index(d, -c - d);
}

long ManinSymbolSpace::tau2_image(long i) const {
    auto [c, d] = p1_[i];
    return p1_.index(-c - d, c);
}

long ManinSymbolSpace::star_image(long i) const {
    auto [c, d] = p1_[i];
    return p1_.index(-c, d);
}

ManinSymbolSpace::ManinSymbolSpace(long N) : p1_(N) {
    const long n = static_cast<long>(p1_.size());
    // Two-term relations: phi(x) = -phi(xS); symbols fixed by S vanish.
    std::vector<long> var(n, -1);
    std::vector<int> sgn(n, 0);
    std::vector<long> rep;
    for (long i = 0; i < n; ++i) {
        if (var[i] != -1 || sgn[i] != 0) continue;
        long j = s_image(i);
        if (j == i) {
            sgn[i] = 0;
            var[i] = -2;
            continue;
        }
        var[i] = var[j] = static_cast<long>(rep.size());
        sgn[i] = 1;
        sgn[j] = -1;
        rep.push_back(i);
    }
    const long nv = static_cast<long>(rep.size());

    using Row = std::map<long, BigRational>;
    std::map<long, Row> pivots;
    std::vector<bool> seen(n, false);
    for (long i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long orbit[3] = {i, tau_image(i), tau2_image(i)};
        Row r;
        for (long x : orbit) {
            seen[x] = true;
            if (sgn[x] == 0) continue;
            r[var[x]] += sgn[x];
        }
        for (auto it = r.begin(); it != r.end();) {
            if (it->second == 0) {
                it = r.erase(it);
            } else {
                ++it;
            }
        }
        std::vector<long> keys;
        for (auto& [k, v] : r)
            if (pivots.count(k)) keys.push_back(k);
        for (long k : keys) {
            BigRational f = r[k];
            if (f == 0) continue;
            for (auto& [kk, vv] : pivots[k]) r[kk] -= f * vv;
        }
        for (auto it = r.begin(); it != r.end();) {
            if (it->second == 0) {
                it = r.erase(it);
            } else {
                ++it;
            }
        }
        if (r.empty()) continue;
        long pv = r.begin()->first;
        BigRational inv = 1 / r.begin()->second;
        for (auto& [k, v] : r) v *= inv;
        for (auto& [pk, prow] : pivots) {
            auto it = prow.find(pv);
            if (it == prow.end()) continue;
            BigRational f = it->second;
            for (auto& [k, v] : r) prow[k] -= f * v;
            for (auto jt = prow.begin(); jt != prow.end();) {
                if (jt->second == 0) {
                    jt = prow.erase(jt);
                } else {
                    ++jt;
                }
            }
        }
        pivots.emplace(pv, std::move(r));
    }

    std::vector<long> free_vars;
    for (long v = 0; v < nv; ++v)
        if (!pivots.count(v)) free_vars.push_back(v);
    for (long f : free_vars) free_.push_back(rep[f]);
    basis_.assign(free_vars.size(), std::vector<BigRational>(n, BigRational(0)));
    for (std::size_t j = 0; j < free_vars.size(); ++j) {
        long f = free_vars[j];
        std::vector<BigRational> x(nv, BigRational(0));
        x[f] = 1;
        for (auto& [pk, prow] : pivots) {
            auto it = prow.find(f);
            if (it != prow.end()) x[pk] = -it->second;
        }
        for (long i = 0; i < n; ++i) {
            if (sgn[i] != 0) basis_[j][i] = sgn[i] * x[var[i]];
        }
    }
}

std::vector<BigRational> ManinSymbolSpace::values_from_coordinates(const std::vector<BigRational>& x) const {
    std::vector<BigRational> v(p1_.size(), BigRational(0));
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (x[j] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (basis_[j][i] != 0) v[i] += x[j] * basis_[j][i];
        }
    }
    return v;
}

RatMatrix ManinSymbolSpace::star_matrix() const {
    std::size_t k = dimension();
    RatMatrix M(k, std::vector<BigRational>(k, BigRational(0)));
    for (std::size_t f = 0; f < k; ++f) {
        long img = star_image(free_[f]);
        for (std::size_t g = 0; g < k; ++g) M[f][g] = basis_[g][img];
    }
    return M;
}

namespace {

// (phi o T_ell) evaluated at symbol i, for phi given by its values on all symbols.
BigRational hecke_apply(const P1List& p1, const std::vector<Mat2>& X, const std::vector<BigRational>& phi, long i) {
    auto [c, d] = p1[i];
    BigRational s = 0;
    for (auto& h : X) {
        long idx = p1.index(c * h[0] + d * h[2], c * h[1] + d * h[3]);
        if (idx >= 0) s += phi[idx];
    }
    return s;
}

}  // namespace

RatMatrix ManinSymbolSpace::hecke_matrix(long ell) const {
    std::size_t k = dimension();
    auto X = heilbronn_merel(ell);
    RatMatrix M(k, std::vector<BigRational>(k, BigRational(0)));
    for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t f = 0; f < k; ++f) M[f][g] = hecke_apply(p1_, X, basis_[g], free_[f]);
    }
    return M;
}

ModularSymbol::ModularSymbol(std::shared_ptr<const ManinSymbolSpace> space, Sign sign, std::vector<long> values,
                             BigRational scale, SymbolProvenance prov)
    : space_(std::move(space)), sign_(sign), values_(std::move(values)), scale_(std::move(scale)), prov_(std::move(prov)) {}

long ModularSymbol::eval_integral(long a, long m) const {
    if (m <= 0) fail(ErrorKind::InvalidInput, "denominator must be positive");
    long g = gcd(a < 0 ? -a : a, m);
    a /= g;
    m /= g;
    const P1List& p1 = space_->p1();
    // Continued fraction of a/m; the k-th term is the Manin symbol ((-1)^(k-1) q_k : q_(k-1)).
    long x = a, y = m;
    long q = 1, q_prev = 0;
    long quo = x >= 0 ? x / y : -((-x + y - 1) / y);
    long r = x - quo * y;
    long sum = values_[p1.index(-1, 0)];
    long sign = -1;
    x = y;
    y = r;
    while (y != 0) {
        quo = x / y;
        r = x - quo * y;
        long q_new = quo * q + q_prev;
        q_prev = q;
        q = q_new;
        sign = -sign;
        sum += values_[p1.index(sign * q, q_prev)];
        x = y;
        y = r;
    }
    return -sum;
}

long ModularSymbol::eval_twisted_integral(long a, long m, long D) const {
    long Dabs = D < 0 ? -D : D;
    long s = 0;
    for (long u = 0; u < Dabs; ++u) {
        int k = kronecker(D, u);
        if (k) s += k * eval_integral(a * Dabs + u * m, m * Dabs);
    }
    return s;
}

ModularSymbol ModularSymbol::with_scale(BigRational scale, SymbolProvenance prov) const {
    return ModularSymbol(space_, sign_, values_, std::move(scale), std::move(prov));
}

ModularSymbol eigen_symbol(std::shared_ptr<const ManinSymbolSpace> space, const WeierstrassCurve& E, Sign sign,
                           long hecke_bound) {
    const long N = space->level();
    if (E.conductor() != N) fail(ErrorKind::InvalidInput, "curve conductor differs from the space level");
    const std::size_t k = space->dimension();
    RatMatrix J = space->star_matrix();
    for (std::size_t i = 0; i < k; ++i) J[i][i] -= sign_value(sign);
    RatMatrix B = nullspace(J, k);  // basis vectors of the current subspace
    SymbolProvenance prov;
    for (long ell : primes_up_to(hecke_bound)) {
        if (B.size() <= 1) break;
        if (N % ell == 0) continue;
        long a = ap(E, ell);
        auto X = heilbronn_merel(ell);
        // Columns: (T_ell - a) applied to each basis vector, in coordinates.
        RatMatrix A(k, std::vector<BigRational>(B.size(), BigRational(0)));
        for (std::size_t j = 0; j < B.size(); ++j) {
            auto phi = space->values_from_coordinates(B[j]);
            const auto& coords = space->coordinate_symbols();
            for (std::size_t f = 0; f < k; ++f) {
                A[f][j] = hecke_apply(space->p1(), X, phi, coords[f]) - a * B[j][f];
            }
        }
        RatMatrix null = nullspace(A, B.size());
        RatMatrix nb;
        for (auto& c : null) {
            std::vector<BigRational> v(k, BigRational(0));
            for (std::size_t j = 0; j < B.size(); ++j)
                if (c[j] != 0)
                    for (std::size_t f = 0; f < k; ++f) v[f] += c[j] * B[j][f];
            nb.push_back(std::move(v));
        }
        B = std::move(nb);
        prov.matched_primes.push_back(ell);
    }
    if (B.size() != 1) {
        fail(ErrorKind::EigenspaceNotRankOne,
             "eigenspace of dimension " + std::to_string(B.size()) + " at level " + std::to_string(N));
    }
    auto vals = space->values_from_coordinates(B[0]);
    BigInt den = 1, num_gcd = 0;
    for (auto& v : vals) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> ints;
    for (auto& v : vals) {
        BigInt x = v.get_num() * (den / v.get_den());
        ints.push_back(x);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_mpz_t());
    }
    if (num_gcd == 0) fail(ErrorKind::EigenspaceNotRankOne, "zero eigenvector");
    std::vector<long> out;
    for (auto& x : ints) out.push_back(to_long(BigInt(x / num_gcd)));
    return ModularSymbol(std::move(space), sign, std::move(out), 1, prov);
}

int fricke_sign(const ModularSymbol& symbol) {
    const long N = symbol.level();
    long zero = symbol.eval_integral(0, 1);
    if (zero != 0) return 1;
    for (long m = 1; m < 10000; ++m) {
        for (long a = 1; a <= m; ++a) {
            if (gcd(a, m) != 1) continue;
            long base = symbol.eval_integral(a, m);
            if (base == 0) continue;
            long image = symbol.eval_integral(-m, N * a) - zero;
            if (image == base) return -1;
            if (image == -base) return 1;
            fail(ErrorKind::EigenspaceNotRankOne, "symbol is not a Fricke eigenvector");
        }
    }
    fail(ErrorKind::EigenspaceNotRankOne, "symbol vanishes on all tested paths");
}

long twisted_sum_integral(const ModularSymbol& symbol, long D) {
    if (D == 1) return symbol.eval_integral(0, 1);
    long Dabs = D < 0 ? -D : D;
    long s = 0;
    for (long u = 0; u < Dabs; ++u) {
        int k = kronecker(D, u);
        if (k) s += k * symbol.eval_integral(u, Dabs);
    }
    return s;
}

BigRational algebraic_L_ratio(const ModularSymbol& symbol, long D) {
    if (D != 1 && !is_fundamental_discriminant(D)) fail(ErrorKind::InvalidInput, "D must be 1 or fundamental");
    if ((D < 0) != (symbol.sign() == Sign::Minus)) fail(ErrorKind::SignMismatch, "symbol sign does not match the twist");
    if (gcd(D, symbol.level()) != 1) fail(ErrorKind::RamifiedTwist, "gcd(D, N) > 1");
    return symbol.scale() * twisted_sum_integral(symbol, D);
}

ModularSymbol normalize(const ModularSymbol& symbol, const WeierstrassCurve& E, int digits) {
    const long N = symbol.level();
    const int w = fricke_sign(symbol);
    const bool plus = symbol.sign() == Sign::Plus;
    const Real omega = plus ? real_period(E) : imaginary_period(E);
    std::vector<long> candidates;
    if (plus) candidates.push_back(1);
    for (long k = 3; k <= 500; ++k) {
        long D = plus ? k : -k;
        if (is_fundamental_discriminant(D)) candidates.push_back(D);
    }
    for (long D : candidates) {
        if (gcd(D, N) != 1) continue;
        long S = twisted_sum_integral(symbol, D);
        if (S == 0) continue;
        int tw = w * kronecker(D, -N);
        if (tw != 1) {
            fail(ErrorKind::NormalizationAmbiguous,
                 "nonzero twisted sum for D = " + std::to_string(D) + " with twisted root number -1");
        }
        Real L = twisted_central_value(E, D, digits);
        Real target = boost::multiprecision::sqrt(Real(D < 0 ? -D : D)) * L / omega;
        auto r = rationalize(target, 1000, 30);
        if (!r || *r == 0) {
            fail(ErrorKind::NormalizationAmbiguous,
                 "could not rationalize L-value ratio for D = " + std::to_string(D));
        }
        SymbolProvenance prov = symbol.provenance();
        prov.auxiliary_discriminant = D;
        prov.anchor_value = *r;
        prov.root_number = w;
        BigRational c = *r / BigRational(S);
        return symbol.with_scale(c, prov);
    }
    fail(ErrorKind::NoNonvanishingTwist, "no auxiliary discriminant with |D| <= 500 gives a nonzero twist");
}

CurveSymbols::CurveSymbols(WeierstrassCurve E, long index_bound, int digits)
    : E_(std::move(E)), index_bound_(index_bound), digits_(digits), state_(std::make_shared<State>()) {}

std::shared_ptr<const ManinSymbolSpace> CurveSymbols::space() const {
    std::call_once(state_->space_once, [this] { state_->space = ManinSymbolSpace::build(E_.conductor(), index_bound_); });
    return state_->space;
}

const ModularSymbol& CurveSymbols::get(int slot) const {
    std::call_once(state_->once[slot], [this, slot] {
        Sign s = slot == 0 ? Sign::Plus : Sign::Minus;
        ModularSymbol raw = eigen_symbol(space(), E_, s);
        state_->sym[slot] = std::make_unique<ModularSymbol>(normalize(raw, E_, digits_));
    });
    return *state_->sym[slot];
}

const ModularSymbol& CurveSymbols::plus() const { return get(0); }

const ModularSymbol& CurveSymbols::minus() const { return get(1); }

}  // namespace iwa
