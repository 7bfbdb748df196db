#include "iwa/curve.hpp"
#include "iwa/error.hpp"

namespace iwa {

namespace {

struct Inv {
    BigInt b2, b4, b6, b8, c4, c6, disc;
};

Inv invariants(const AInvariants& a) {
    const auto& [a1, a2, a3, a4, a6] = a;
    Inv r;
    r.b2 = a1 * a1 + 4 * a2;
    r.b4 = 2 * a4 + a1 * a3;
    r.b6 = a3 * a3 + 4 * a6;
    r.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    r.c4 = r.b2 * r.b2 - 24 * r.b4;
    r.c6 = -r.b2 * r.b2 * r.b2 + 36 * r.b2 * r.b4 - 216 * r.b6;
    r.disc = -r.b2 * r.b2 * r.b8 - 8 * r.b4 * r.b4 * r.b4 - 27 * r.b6 * r.b6 + 9 * r.b2 * r.b4 * r.b6;
    return r;
}

long rmod(const BigInt& x, long p) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

long mulm(long a, long b, long p) { return static_cast<long>(static_cast<__int128>(a) * b % p); }

long legendre(long a, long p) {
    a = mod(a, p);
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

class Local {
public:
    Local(long p, int deg) : p_(p), deg_(deg) {}

    long val(const BigInt& x) const { return x == 0 ? kInfinity : valuation(x, p_); }
    bool pdiv(const BigInt& x) const { return x == 0 || val(x) > 0; }
    long red(const BigInt& x) const { return rmod(x, p_); }
    long inv(const BigInt& x) const { return invmod(red(x), p_); }

    BigInt div(const BigInt& x, const BigInt& y) const {
        if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) fail(ErrorKind::InvalidInput, "Tate: inexact division");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        return q;
    }

    // Does a X^2 + b X + c have a root in the residue field?
    bool quad_roots(const BigInt& A, const BigInt& B, const BigInt& C) const {
        long a = red(A), b = red(B), c = red(C);
        if (a == 0) return b != 0 || c == 0;
        if (deg_ == 2) return true;
        if (p_ == 2) return c == 0 || (a + b + c) % 2 == 0;
        return legendre(mulm(b, b, p_) - mulm(4 % p_, mulm(a, c, p_), p_), p_) >= 0;
    }

    // Number of roots of X^3 + b X^2 + c X + d in the residue field (squarefree cubic).
    int cubic_roots(const BigInt& B, const BigInt& C, const BigInt& D) const {
        long b = red(B), c = red(C), d = red(D);
        int n = 0;
        if (p_ <= 1000000) {
            for (long x = 0; x < p_; ++x) {
                long v = (mulm(mulm(x, x, p_), (x + b) % p_, p_) + mulm(c, x, p_) + d) % p_;
                if (v == 0) ++n;
            }
        } else {
            n = roots_by_gcd(b, c, d);
        }
        if (deg_ == 2) return n > 0 ? 3 : 0;
        return n;
    }

private:
    // deg gcd(X^p - X, f) for monic cubic f.
    int roots_by_gcd(long b, long c, long d) const {
        auto mulpoly = [&](const std::array<long, 3>& u, const std::array<long, 3>& v) {
            long t[5] = {0, 0, 0, 0, 0};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) t[i + j] = (t[i + j] + mulm(u[i], v[j], p_)) % p_;
            // reduce with X^3 = -b X^2 - c X - d
            for (int k = 4; k >= 3; --k) {
                long h = t[k];
                t[k] = 0;
                t[k - 1] = mod(t[k - 1] - mulm(h, b, p_), p_);
                t[k - 2] = mod(t[k - 2] - mulm(h, c, p_), p_);
                t[k - 3] = mod(t[k - 3] - mulm(h, d, p_), p_);
            }
            return std::array<long, 3>{t[0], t[1], t[2]};
        };
        std::array<long, 3> r{1, 0, 0}, x{0, 1, 0};
        for (long e = p_; e; e >>= 1) {
            if (e & 1) r = mulpoly(r, x);
            x = mulpoly(x, x);
        }
        r[1] = mod(r[1] - 1, p_);
        // gcd of f (monic cubic) with r (degree <= 2) over F_p
        std::vector<long> f{d, c, b, 1}, g{r[0], r[1], r[2]};
        auto deg = [](const std::vector<long>& h) {
            for (long i = static_cast<long>(h.size()) - 1; i >= 0; --i)
                if (h[i] != 0) return i;
            return -1L;
        };
        while (deg(g) >= 0) {
            long dg = deg(g);
            long ig = invmod(g[dg], p_);
            while (deg(f) >= dg) {
                long df = deg(f);
                long q = mulm(f[df], ig, p_);
                for (long i = 0; i <= dg; ++i) f[df - dg + i] = mod(f[df - dg + i] - mulm(q, g[i], p_), p_);
            }
            std::swap(f, g);
        }
        return static_cast<int>(deg(f));
    }

    long p_;
    int deg_;
};

}  // namespace

AInvariants rst_transform(const AInvariants& a, const BigInt& r, const BigInt& s, const BigInt& t) {
    const auto& [a1, a2, a3, a4, a6] = a;
    return {a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1};
}

TateResult tate(const AInvariants& a_in, long p, int residue_degree) {
    if (!is_prime(p)) fail(ErrorKind::InvalidInput, "Tate's algorithm needs a prime");
    if (residue_degree != 1 && residue_degree != 2) fail(ErrorKind::InvalidInput, "residue degree must be 1 or 2");
    const Local L(p, residue_degree);
    const BigInt pi = p;
    AInvariants C = a_in;
    for (;;) {
        Inv I = invariants(C);
        if (I.disc == 0) fail(ErrorKind::InvalidInput, "singular curve");
        long vd = L.val(I.disc);
        LocalData out;
        out.prime = p;
        out.discriminant_valuation = vd;
        if (vd == 0) return {C, out};

        BigInt r, t;
        {
            const auto& [a1, a2, a3, a4, a6] = C;
            if (p == 2) {
                if (L.pdiv(I.b2)) {
                    r = L.red(a4);
                    t = L.red(((r + a2) * r + a4) * r + a6);
                } else {
                    long temp = L.inv(a1);
                    r = temp * a3;
                    t = temp * (a4 + r * r);
                }
            } else if (p == 3) {
                if (L.pdiv(I.b2)) {
                    r = L.red(-I.b6);
                } else {
                    r = -L.inv(I.b2) * I.b4;
                }
                t = a1 * r + a3;
            } else {
                if (L.pdiv(I.c4)) {
                    r = -L.inv(12) * I.b2;
                } else {
                    r = -L.inv(12 * I.c4) * (I.c6 + I.b2 * I.c4);
                }
                t = -L.inv(2) * (a1 * r + a3);
            }
        }
        r = L.red(r);
        t = L.red(t);
        C = rst_transform(C, r, 0, t);
        I = invariants(C);

        if (!L.pdiv(I.b2)) {
            const auto& [a1, a2, a3, a4, a6] = C;
            out.kodaira = "I" + std::to_string(vd);
            out.conductor_exponent = 1;
            if (L.quad_roots(1, a1, -a2)) {
                out.reduction = Reduction::SplitMultiplicative;
                out.tamagawa = static_cast<int>(vd);
            } else {
                out.reduction = Reduction::NonsplitMultiplicative;
                out.tamagawa = vd % 2 ? 1 : 2;
            }
            return {C, out};
        }
        out.reduction = Reduction::Additive;
        {
            const auto& [a1, a2, a3, a4, a6] = C;
            if (L.val(a6) < 2) {
                out.kodaira = "II";
                out.conductor_exponent = static_cast<int>(vd);
                out.tamagawa = 1;
                return {C, out};
            }
            if (L.val(I.b8) < 3) {
                out.kodaira = "III";
                out.conductor_exponent = static_cast<int>(vd - 1);
                out.tamagawa = 2;
                return {C, out};
            }
            if (L.val(I.b6) < 3) {
                out.kodaira = "IV";
                out.conductor_exponent = static_cast<int>(vd - 2);
                out.tamagawa = L.quad_roots(1, L.div(a3, pi), -L.div(a6, pi * pi)) ? 3 : 1;
                return {C, out};
            }
        }
        {
            BigInt s;
            const auto& [a1, a2, a3, a4, a6] = C;
            if (p == 2) {
                s = L.red(a2);
                t = pi * L.red(L.div(a6, pi * pi));
            } else if (p == 3) {
                s = a1;
                t = a3;
            } else {
                long half = L.inv(2);
                s = -a1 * half;
                t = -a3 * half;
            }
            C = rst_transform(C, 0, s, t);
        }
        BigInt b, c, d;
        {
            const auto& [a1, a2, a3, a4, a6] = C;
            b = L.div(a2, pi);
            c = L.div(a4, pi * pi);
            d = L.div(a6, pi * pi * pi);
        }
        BigInt bb = b * b, cc = c * c, bc = b * c;
        BigInt w = 27 * d * d - bb * cc + 4 * b * bb * d - 18 * bc * d + 4 * c * cc;
        BigInt x = 3 * c - bb;
        int sw = L.pdiv(w) ? (L.pdiv(x) ? 3 : 2) : 1;
        if (sw == 1) {
            out.kodaira = "I0*";
            out.conductor_exponent = static_cast<int>(vd - 4);
            out.tamagawa = 1 + L.cubic_roots(b, c, d);
            return {C, out};
        }
        if (sw == 2) {
            if (p == 2) {
                r = L.red(c);
            } else if (p == 3) {
                r = c * L.inv(b);
            } else {
                r = (bc - 9 * d) * L.inv(2 * x);
            }
            r = pi * L.red(r);
            C = rst_transform(C, r, 0, 0);
            long ix = 3, iy = 3;
            BigInt mx = pi * pi, my = mx;
            for (;;) {
                const auto& [a1, a2, a3, a4, a6] = C;
                BigInt a2t = L.div(a2, pi);
                BigInt a3t = L.div(a3, my);
                BigInt a4t = L.div(a4, pi * mx);
                BigInt a6t = L.div(a6, mx * my);
                if (L.pdiv(a3t * a3t + 4 * a6t)) {
                    if (p == 2) {
                        t = my * L.red(a6t);
                    } else {
                        t = my * L.red(-a3t * L.inv(2));
                    }
                    C = rst_transform(C, 0, 0, t);
                    my *= pi;
                    ++iy;
                    const auto& [b1, b2_, b3, b4, b6] = C;
                    a2t = L.div(b2_, pi);
                    a3t = L.div(b3, my);
                    a4t = L.div(b4, pi * mx);
                    a6t = L.div(b6, mx * my);
                    if (L.pdiv(a4t * a4t - 4 * a6t * a2t)) {
                        if (p == 2) {
                            r = mx * L.red(a6t * L.inv(a2t));
                        } else {
                            r = mx * L.red(-a4t * L.inv(2 * a2t));
                        }
                        C = rst_transform(C, r, 0, 0);
                        mx *= pi;
                        ++ix;
                    } else {
                        out.tamagawa = L.quad_roots(a2t, a4t, a6t) ? 4 : 2;
                        break;
                    }
                } else {
                    out.tamagawa = L.quad_roots(1, a3t, -a6t) ? 4 : 2;
                    break;
                }
            }
            out.kodaira = "I" + std::to_string(ix + iy - 5) + "*";
            out.conductor_exponent = static_cast<int>(vd - ix - iy + 1);
            return {C, out};
        }
        // triple root
        if (p == 2) {
            r = b;
        } else if (p == 3) {
            r = L.red(-d);
        } else {
            r = -b * L.inv(3);
        }
        r = pi * L.red(r);
        C = rst_transform(C, r, 0, 0);
        BigInt p2 = pi * pi;
        BigInt x3t = L.div(C[2], p2);
        BigInt x6t = L.div(C[4], p2 * p2);
        if (!L.pdiv(x3t * x3t + 4 * x6t)) {
            out.kodaira = "IV*";
            out.conductor_exponent = static_cast<int>(vd - 6);
            out.tamagawa = L.quad_roots(1, x3t, -x6t) ? 3 : 1;
            return {C, out};
        }
        t = p == 2 ? x6t : x3t * L.inv(2);
        t = -p2 * L.red(t);
        C = rst_transform(C, 0, 0, t);
        if (L.val(C[3]) < 4) {
            out.kodaira = "III*";
            out.conductor_exponent = static_cast<int>(vd - 7);
            out.tamagawa = 2;
            return {C, out};
        }
        if (L.val(C[4]) < 6) {
            out.kodaira = "II*";
            out.conductor_exponent = static_cast<int>(vd - 8);
            out.tamagawa = 1;
            return {C, out};
        }
        // Not minimal: scale by u = p and start over.
        BigInt u = pi;
        C = {L.div(C[0], u), L.div(C[1], u * u), L.div(C[2], u * u * u), L.div(C[3], u * u * u * u),
             L.div(C[4], u * u * u * u * u * u)};
    }
}

}  // namespace iwa
