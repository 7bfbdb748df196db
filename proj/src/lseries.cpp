#include "iwa/lseries.hpp"

#include "iwa/error.hpp"
#include "iwa/quad_field.hpp"

#include <algorithm>

namespace iwa {

void validate(const RunConfig& cfg) {
    if (cfg.depth < 1) fail(ErrorKind::InvalidInput, "depth must be at least 1");
    if (cfg.coeff_prec < 2) fail(ErrorKind::InvalidInput, "coefficient precision must be at least 2");
    if (cfg.constant_digits < 1) fail(ErrorKind::InvalidInput, "constant digits must be positive");
    if (cfg.numeric_digits < 30 || cfg.numeric_digits > 90) fail(ErrorKind::InvalidInput, "numeric digits must lie in [30, 90]");
    if (cfg.max_terms < 2) fail(ErrorKind::InvalidInput, "max_terms must be at least 2");
    if (cfg.index_bound < 1) fail(ErrorKind::InvalidInput, "index bound must be positive");
}

namespace {

BigInt rmod(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

long ipow_long(long p, long e) {
    if (e < 0) return 1;
    return to_long(ipow(p, e));
}

// First `count` Taylor coefficients at X = 1 of sum_j f[j] X^j, modulo m.
std::vector<BigInt> taylor_at_one(std::vector<BigInt> f, std::size_t count, const BigInt& m) {
    std::vector<BigInt> out;
    for (auto& x : f) x = rmod(x, m);
    std::size_t len = f.size();
    while (out.size() < count && len > 0) {
        for (std::size_t i = len - 1; i-- > 0;) {
            f[i] += f[i + 1];
            if (f[i] >= m) f[i] -= m;
        }
        out.push_back(f[0]);
        f.erase(f.begin());
        --len;
    }
    while (out.size() < count) out.push_back(0);
    return out;
}

void check_twist(const ModularSymbol& symbol, long p, long D) {
    const long N = symbol.level();
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidInput, "p must be an odd prime");
    if (N % p == 0) fail(ErrorKind::BadReduction, std::to_string(p) + " divides the conductor");
    if (D != 1) {
        if (!is_fundamental_discriminant(D)) fail(ErrorKind::InvalidInput, "twist must be a fundamental discriminant");
        if (gcd(D, N) != 1) fail(ErrorKind::RamifiedTwist, "gcd(D, N) > 1");
        if (D % p == 0) fail(ErrorKind::RamifiedPrime, "p divides the twisting discriminant");
    }
    if ((D < 0) != (symbol.sign() == Sign::Minus)) fail(ErrorKind::SignMismatch, "symbol sign does not match the twist");
}

}  // namespace

BigRational MazurTateElement::total() const {
    BigInt s = 0;
    for (auto& x : integral) s += x;
    return scale * s;
}

MazurTateElement MazurTateElement::project() const {
    if (n < 0) fail(ErrorKind::InvalidInput, "cannot project the trivial level");
    MazurTateElement r = *this;
    r.n = n - 1;
    std::size_t count = n >= 1 ? static_cast<std::size_t>(ipow_long(p, n - 1)) : 1;
    r.integral.assign(count, BigInt(0));
    for (std::size_t j = 0; j < integral.size(); ++j) r.integral[j % count] += integral[j];
    return r;
}

MazurTateElement mazur_tate(const ModularSymbol& symbol, long p, long n, long twist_D, long gamma) {
    check_twist(symbol, p, twist_D);
    if (n < -1) fail(ErrorKind::InvalidInput, "level must be at least -1");
    if (gamma == 0) gamma = 1 + p;
    if (mod(gamma, p) != 1 || mod(gamma, p * p) == 1) fail(ErrorKind::InvalidInput, "gamma must generate 1 + pZ_p");
    const long P = ipow_long(p, n + 1);
    const long Dabs = twist_D < 0 ? -twist_D : twist_D;
    if (BigInt(P) * Dabs * 4 > BigInt(1L << 40)) fail(ErrorKind::ResourceLimit, "Mazur-Tate level too large");
    const long count = n >= 0 ? ipow_long(p, n) : 1;
    std::vector<long> teich;
    long e = n >= 0 ? ipow_long(p, n) : 1;
    for (long b = 1; b < p; ++b) teich.push_back(P == 1 ? 0 : powmod(b, e, P));
    std::vector<int> chi;
    for (long u = 0; u < Dabs; ++u) chi.push_back(twist_D == 1 ? 1 : kronecker(twist_D, u));

    MazurTateElement out;
    out.p = p;
    out.n = n;
    out.twist_D = twist_D;
    out.gamma = gamma;
    out.sign = symbol.sign();
    out.scale = symbol.scale();
    out.integral.assign(static_cast<std::size_t>(count), BigInt(0));
    long x = 1 % P;
    for (long j = 0; j < count; ++j) {
        long s = 0;
        for (long t : teich) {
            long a = P == 1 ? 0 : static_cast<long>(static_cast<__int128>(x) * t % P);
            if (twist_D == 1) {
                s += symbol.eval_integral(a, P);
            } else {
                for (long u = 0; u < Dabs; ++u) {
                    if (chi[u]) s += chi[u] * symbol.eval_integral(a * Dabs + u * P, P * Dabs);
                }
            }
        }
        out.integral[j] = s;
        if (P > 1) x = static_cast<long>(static_cast<__int128>(x) * mod(gamma, P) % P);
    }
    return out;
}

long twisted_ap(const WeierstrassCurve& E, long p, long D) {
    long a = ap(E, p);
    return D == 1 ? a : kronecker(D, p) * a;
}

StabilizedElement stabilize_ordinary(const MazurTateElement& tn, const MazurTateElement& tm, const PAdicNumber& alpha,
                                     long K, long constant_digits) {
    if (alpha.is_zero() || alpha.valuation() != 0) fail(ErrorKind::InvalidInput, "alpha must be a p-adic unit");
    if (tn.p != tm.p || tn.gamma != tm.gamma || tn.twist_D != tm.twist_D || tm.n != tn.n - 1 || tn.scale != tm.scale) {
        fail(ErrorKind::InvalidInput, "incompatible Mazur-Tate elements");
    }
    const long p = tn.p;
    K = std::min(K, alpha.absolute_precision());
    const BigInt m = ipow(p, K);
    PAdicNumber ainv = alpha.inverse();
    BigInt a1 = ainv.pow(tn.n + 1).residue(K);
    BigInt a2 = ainv.pow(tn.n + 2).residue(K);

    StabilizedElement out;
    out.p = p;
    out.n = tn.n;
    out.twist_D = tn.twist_D;
    out.gamma = tn.gamma;
    out.alpha = alpha;
    out.scale = tn.scale;
    out.modulus_exp = K;
    out.integral.resize(tn.size());
    for (std::size_t j = 0; j < tn.size(); ++j) {
        const BigInt& prev = tm.integral[j % tm.size()];
        out.integral[j] = rmod(a1 * tn.integral[j] - a2 * prev, m);
    }
    BigRational t1 = tn.total();
    BigRational t2 = tm.total() * BigRational(static_cast<long>(tn.size() / tm.size()));
    if (t1 == 0 && t2 == 0) {
        out.constant = PAdicNumber::exact_zero(p);
    } else {
        long cap = constant_digits + 4 + std::max(0L, -valuation(tn.scale, p));
        PAdicNumber ai = alpha.inverse();
        PAdicNumber c = ai.pow(tn.n + 1) * PAdicNumber::from_rational(t1, p, cap) -
                        ai.pow(tn.n + 2) * PAdicNumber::from_rational(t2, p, cap);
        out.constant = c.with_absolute_precision(constant_digits);
    }
    return out;
}

StabilizedElement stabilized_element(const ModularSymbol& symbol, const WeierstrassCurve& E, long p, long n,
                                     long twist_D, const RunConfig& cfg, long gamma,
                                     std::optional<PAdicNumber> alpha_override) {
    if (n < 1) fail(ErrorKind::InvalidInput, "depth must be at least 1");
    check_twist(symbol, p, twist_D);
    long a = twisted_ap(E, p, twist_D);
    if (mod(a, p) == 0) fail(ErrorKind::SupersingularInput, "a_p divisible by p");
    long vden = std::max(0L, -valuation(symbol.scale(), p));
    long K = std::max(cfg.coeff_prec, n + 1) + vden + 3;
    PAdicNumber alpha = alpha_override ? *alpha_override : unit_root(a, p, std::max(K, cfg.constant_digits) + 6);
    auto t0 = mazur_tate(symbol, p, n, twist_D, gamma);
    auto t1 = mazur_tate(symbol, p, n - 1, twist_D, gamma);
    auto t2 = mazur_tate(symbol, p, n - 2, twist_D, gamma);
    StabilizedElement top = stabilize_ordinary(t0, t1, alpha, K, cfg.constant_digits);
    StabilizedElement low = stabilize_ordinary(t1, t2, alpha, K, cfg.constant_digits);
    const BigInt m = ipow(p, std::min(top.modulus_exp, low.modulus_exp));
    std::vector<BigInt> proj(low.integral.size(), BigInt(0));
    for (std::size_t j = 0; j < top.integral.size(); ++j) proj[j % proj.size()] += top.integral[j];
    for (std::size_t i = 0; i < proj.size(); ++i) {
        if (rmod(proj[i] - low.integral[i], m) != 0) {
            fail(ErrorKind::NormCompatibilityFailed, "level " + std::to_string(n) + " does not project to level " +
                                                         std::to_string(n - 1));
        }
    }
    if (!top.constant.agrees_with(low.constant)) fail(ErrorKind::NormCompatibilityFailed, "total masses differ");
    top.norm_compatible = true;
    return top;
}

long omega_guard(long n, long p, long k) {
    if (k <= 0) return kInfinity;
    long lg = 0;
    for (long q = p; q <= k; q *= p) ++lg;
    return n - lg;
}

PAdicSeries to_series(const StabilizedElement& elem, long M, long max_terms) {
    const long p = elem.p;
    const long n = elem.n;
    const long window = ipow_long(p, n) - ipow_long(p, n - 1);
    const std::size_t len = static_cast<std::size_t>(std::min(window, max_terms));
    const long vden = std::max(0L, -valuation(elem.scale, p));
    const BigInt m = ipow(p, elem.modulus_exp);
    auto c = taylor_at_one(elem.integral, len, m);
    PAdicNumber c0 = PAdicNumber::from_integer(c[0], p, elem.modulus_exp).scaled(elem.scale);
    if (!c0.agrees_with(elem.constant)) fail(ErrorKind::NormCompatibilityFailed, "constant term mismatch");
    std::vector<PAdicNumber> out{elem.constant};
    for (std::size_t k = 1; k < len; ++k) {
        long abs = std::min(M, omega_guard(n, p, static_cast<long>(k)) - vden);
        PAdicNumber v = PAdicNumber::from_integer(c[k], p, elem.modulus_exp).scaled(elem.scale);
        v = v.is_exact_zero() ? PAdicNumber::zero(p, abs) : v.with_absolute_precision(abs);
        out.push_back(v);
    }
    bool any = false;
    for (auto& x : out)
        if (x.absolute_precision() >= 1) any = true;
    if (!any) fail(ErrorKind::PrecisionExhausted, "no coefficient retains a digit");
    return PAdicSeries(p, std::move(out), n);
}

PAdicSeries ordinary_lseries(const CurveSymbols& cs, long p, long twist_D, const RunConfig& cfg, long gamma) {
    validate(cfg);
    const ModularSymbol& sym = cs.symbol(CurveSymbols::sign_for(twist_D));
    auto elem = stabilized_element(sym, cs.curve(), p, cfg.depth, twist_D, cfg, gamma);
    return to_series(elem, cfg.coeff_prec, cfg.max_terms);
}

QuadSeries QuadSeries::conj() const {
    QuadSeries r = *this;
    for (auto& z : r.coeffs) z = z.conj();
    return r;
}

std::pair<QuadSeries, QuadSeries> lp_alpha_supersingular(const ModularSymbol& symbol, const WeierstrassCurve& E,
                                                         long p, long n, long twist_D, long M, long gamma) {
    if (n < 1) fail(ErrorKind::InvalidInput, "depth must be at least 1");
    check_twist(symbol, p, twist_D);
    long a = twisted_ap(E, p, twist_D);
    if (mod(a, p) != 0) fail(ErrorKind::OrdinaryInput, "a_p is a unit");
    if (a != 0) fail(ErrorKind::InvalidInput, "only a_p = 0 is supported");
    auto tn = mazur_tate(symbol, p, n, twist_D, gamma);
    auto tm = mazur_tate(symbol, p, n - 1, twist_D, gamma);
    // alpha^-k = u + v alpha, with alpha^-1 = -alpha/p.
    auto inv_pow = [p](long k) {
        BigRational u = 1, v = 0;
        for (long i = 0; i < k; ++i) {
            BigRational nu = v, nv = -u / BigRational(p);
            u = nu;
            v = nv;
        }
        return std::pair<BigRational, BigRational>{u, v};
    };
    auto [u1, v1] = inv_pow(n + 1);
    auto [u2, v2] = inv_pow(n + 2);
    const long vden = std::max(0L, -valuation(symbol.scale(), p));
    const long K = M + 2 * n + 6 + vden;
    const BigInt m = ipow(p, K);
    const std::size_t count = tn.size();
    std::vector<BigInt> prev(count);
    for (std::size_t j = 0; j < count; ++j) prev[j] = tm.integral[j % tm.size()];
    auto th = taylor_at_one(tn.integral, count, m);
    auto pr = taylor_at_one(prev, count, m);
    const BigRational& c = symbol.scale();
    QuadSeries s;
    s.p = p;
    s.a_p = a;
    s.n = n;
    for (std::size_t k = 0; k < count; ++k) {
        PAdicNumber x = PAdicNumber::from_integer(th[k], p, K);
        PAdicNumber y = PAdicNumber::from_integer(pr[k], p, K);
        PAdicNumber A = x.scaled(c * u1) - y.scaled(c * u2);
        PAdicNumber B = x.scaled(c * v1) - y.scaled(c * v2);
        s.coeffs.emplace_back(A, B, a);
    }
    return {s, s.conj()};
}

std::pair<PAdicSeries, PAdicSeries> pollack_decompose(const std::pair<QuadSeries, QuadSeries>& pair, long max_terms) {
    const QuadSeries& La = pair.first;
    const QuadSeries& Lb = pair.second;
    const long p = La.p;
    const long n = La.n;
    if (La.a_p != 0) fail(ErrorKind::OrdinaryInput, "plus/minus decomposition needs a_p = 0");
    std::vector<PAdicNumber> A, B;
    for (std::size_t k = 0; k < La.coeffs.size(); ++k) {
        QuadExtElement s = La.coeffs[k] + Lb.coeffs[k];
        QuadExtElement d = La.coeffs[k] - Lb.coeffs[k];
        if (!s.b().is_zero() || !d.a().is_zero()) {
            fail(ErrorKind::NonRationalResult, "alpha-components do not cancel at T^" + std::to_string(k));
        }
        A.push_back(s.a().scaled(BigRational(1, 2)));
        B.push_back(d.b().scaled(BigRational(1, 2)));
    }
    auto solve = [&](std::vector<PAdicNumber> coeffs, Sign sign) {
        HalfLog h = half_log_truncation(sign, n, p);
        BigRational f(ipow(p, 1 + h.pending));
        for (auto& x : coeffs) x = x.scaled(f);
        PAdicSeries target(p, std::move(coeffs), n);
        PAdicSeries q = series_solve(target, h.poly);
        std::vector<PAdicNumber> out(q.coefficients().begin(),
                                     q.coefficients().begin() +
                                         static_cast<long>(std::min<std::size_t>(q.length(), max_terms)));
        return PAdicSeries(p, std::move(out), n);
    };
    return {solve(std::move(A), Sign::Plus), solve(std::move(B), Sign::Minus)};
}

std::pair<PAdicSeries, PAdicSeries> signed_lseries(const CurveSymbols& cs, long p, long twist_D, const RunConfig& cfg,
                                                   long gamma) {
    validate(cfg);
    const ModularSymbol& sym = cs.symbol(CurveSymbols::sign_for(twist_D));
    auto pair = lp_alpha_supersingular(sym, cs.curve(), p, cfg.depth, twist_D, cfg.coeff_prec, gamma);
    auto [Lp, Lm] = pollack_decompose(pair, cfg.max_terms);
    auto cap = [&](const PAdicSeries& s) {
        std::vector<PAdicNumber> c;
        for (auto& x : s.coefficients()) c.push_back(x.with_absolute_precision(cfg.coeff_prec));
        return PAdicSeries(p, std::move(c), s.omega_level());
    };
    return {cap(Lp), cap(Lm)};
}

}  // namespace iwa
