#include "iwa/analytic.hpp"

#include "iwa/error.hpp"
#include "iwa/quad_field.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace iwa {

namespace {

Real to_real(const BigInt& x) { return Real(x.get_str()); }

Real agm(Real a, Real b) {
    const Real eps = Real("1e-95");
    for (int i = 0; i < 400; ++i) {
        Real an = (a + b) / 2;
        Real bn = boost::multiprecision::sqrt(a * b);
        a = an;
        b = bn;
        if (boost::multiprecision::abs(a - b) <= eps * a) break;
    }
    return a;
}

struct Cubic {
    Real c3, c2, c1, c0;  // 4x^3 + b2 x^2 + 2 b4 x + b6
    Real operator()(const Real& x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
};

// Root of f in [lo, hi] with a sign change.
Real bisect(const Cubic& f, Real lo, Real hi) {
    Real flo = f(lo);
    for (int i = 0; i < 420; ++i) {
        Real mid = (lo + hi) / 2;
        Real fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

Cubic cubic_of(const WeierstrassCurve& E) { return {Real(4), to_real(E.b2()), 2 * to_real(E.b4()), to_real(E.b6())}; }

Real root_bound(const Cubic& f) {
    using boost::multiprecision::abs;
    return 1 + (abs(f.c2) + abs(f.c1) + abs(f.c0)) / 4;
}

struct Roots {
    bool three = false;
    Real e1, e2, e3;
};

Roots real_roots(const WeierstrassCurve& E) {
    Cubic f = cubic_of(E);
    Real B = root_bound(f);
    Roots r;
    if (E.discriminant() > 0) {
        // critical points of f separate the three roots
        Real disc = f.c2 * f.c2 - 3 * f.c3 * f.c1;
        Real s = boost::multiprecision::sqrt(disc);
        Real xm = (-f.c2 - s) / (3 * f.c3);
        Real xp = (-f.c2 + s) / (3 * f.c3);
        r.three = true;
        r.e1 = bisect(f, xp, B);
        r.e2 = bisect(f, xm, xp);
        r.e3 = bisect(f, -B, xm);
    } else {
        r.e1 = bisect(f, -B, B);
    }
    return r;
}

}  // namespace

Real real_period(const WeierstrassCurve& E) {
    using boost::multiprecision::sqrt;
    const Real pi = boost::math::constants::pi<Real>();
    Roots r = real_roots(E);
    if (r.three) return pi / agm(sqrt(r.e1 - r.e3), sqrt(r.e1 - r.e2));
    Cubic f = cubic_of(E);
    Real dg = 12 * r.e1 * r.e1 + 2 * f.c2 * r.e1 + f.c1;
    Real rr = sqrt(dg / 4);
    Real beta = 3 * r.e1 + f.c2 / 4;
    return 2 * pi / agm(2 * sqrt(rr), sqrt(2 * rr + beta));
}

Real imaginary_period(const WeierstrassCurve& E) {
    using boost::multiprecision::sqrt;
    const Real pi = boost::math::constants::pi<Real>();
    Roots r = real_roots(E);
    if (r.three) return pi / agm(sqrt(r.e1 - r.e3), sqrt(r.e2 - r.e3));
    Cubic f = cubic_of(E);
    Real dg = 12 * r.e1 * r.e1 + 2 * f.c2 * r.e1 + f.c1;
    Real rr = sqrt(dg / 4);
    Real beta = 3 * r.e1 + f.c2 / 4;
    return 2 * pi / agm(2 * sqrt(rr), sqrt(2 * rr - beta));
}

namespace {

long terms_needed(double X, int digits) {
    double n = X * (digits + 10) * std::log(10.0) / (2 * M_PI) + 2;
    if (n > 5e6) fail(ErrorKind::ResourceLimit, "L-series needs too many terms");
    return static_cast<long>(n);
}

}  // namespace

Real twisted_central_value(const WeierstrassCurve& E, long D, int digits) {
    if (digits > 90) fail(ErrorKind::InvalidInput, "at most 90 digits are supported");
    const long N = E.conductor();
    long Dabs = D < 0 ? -D : D;
    if (gcd(Dabs, N) != 1) fail(ErrorKind::RamifiedTwist, "gcd(D, N) > 1");
    const Real pi = boost::math::constants::pi<Real>();
    Real X = Real(Dabs) * boost::multiprecision::sqrt(Real(N));
    long nmax = terms_needed(static_cast<double>(Dabs) * std::sqrt(static_cast<double>(N)), digits);
    auto a = an_list(E, nmax);
    Real q = boost::multiprecision::exp(-2 * pi / X);
    Real qn = 1;
    Real sum = 0;
    for (long n = 1; n <= nmax; ++n) {
        qn *= q;
        if (a[n] == 0) continue;
        int k = D == 1 ? 1 : kronecker(D, n);
        if (k == 0) continue;
        sum += Real(k * a[n]) * qn / n;
    }
    return 2 * sum;
}

Real cusp_form_on_axis(const WeierstrassCurve& E, const Real& y, int digits) {
    const long N = E.conductor();
    const Real pi = boost::math::constants::pi<Real>();
    double yd = static_cast<double>(y);
    long nmax = terms_needed(std::sqrt(static_cast<double>(N)) / yd, digits);
    auto a = an_list(E, nmax);
    Real q = boost::multiprecision::exp(-2 * pi * y / boost::multiprecision::sqrt(Real(N)));
    Real qn = 1, sum = 0;
    for (long n = 1; n <= nmax; ++n) {
        qn *= q;
        if (a[n]) sum += Real(a[n]) * qn;
    }
    return sum;
}

BigRational to_rational(const Real& x) {
    BigRational q;
    mpfr_get_q(q.get_mpq_t(), x.backend().data());
    return q;
}

std::optional<BigRational> rationalize(const Real& x, long max_den, int digits) {
    BigRational q = to_rational(x);
    BigRational r = best_rational(q, max_den);
    Real err = boost::multiprecision::abs(x - Real(r.get_num().get_str()) / Real(r.get_den().get_str()));
    Real scale = boost::multiprecision::abs(x) > 1 ? boost::multiprecision::abs(x) : Real(1);
    Real tol = boost::multiprecision::pow(Real(10), -digits);
    if (err < tol * scale) return r;
    return std::nullopt;
}

}  // namespace iwa
