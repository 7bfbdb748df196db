#pragma once

#include "iwa/curve.hpp"
#include "iwa/nt.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <optional>

namespace iwa {

// 100 significant decimal digits; callers ask for fewer.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;

// Least positive real period of the Neron lattice.
Real real_period(const WeierstrassCurve& E);
// Positive generator of (lattice intersected with iR), divided by i.
Real imaginary_period(const WeierstrassCurve& E);

// L(E, kron(D, .), 1) for fundamental D (or 1) coprime to N, assuming the twisted root number is +1.
Real twisted_central_value(const WeierstrassCurve& E, long D, int digits);

// sum a_n exp(-2 pi n y / sqrt(N)).
Real cusp_form_on_axis(const WeierstrassCurve& E, const Real& y, int digits);

// p/q with q <= max_den and |x - p/q| < 10^-digits, if one exists.
std::optional<BigRational> rationalize(const Real& x, long max_den, int digits);

BigRational to_rational(const Real& x);

}  // namespace iwa
