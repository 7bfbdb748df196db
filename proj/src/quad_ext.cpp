#include "iwa/quad_ext.hpp"

#include "iwa/error.hpp"

namespace iwa {

QuadExtElement::QuadExtElement(PAdicNumber a, PAdicNumber b, long a_p) : a_(std::move(a)), b_(std::move(b)), ap_(a_p) {
    if (a_.prime() != b_.prime()) fail(ErrorKind::InvalidInput, "mixed primes in quadratic extension element");
}

QuadExtElement QuadExtElement::operator+(const QuadExtElement& o) const { return {a_ + o.a_, b_ + o.b_, ap_}; }

QuadExtElement QuadExtElement::operator-(const QuadExtElement& o) const { return {a_ - o.a_, b_ - o.b_, ap_}; }

QuadExtElement QuadExtElement::operator*(const QuadExtElement& o) const {
    if (ap_ != o.ap_) fail(ErrorKind::InvalidInput, "mismatched quadratic extensions");
    PAdicNumber bb = b_ * o.b_;
    BigRational p(a_.prime());
    PAdicNumber a = a_ * o.a_ - bb.scaled(p);
    PAdicNumber b = a_ * o.b_ + b_ * o.a_ + bb.scaled(BigRational(ap_));
    return {a, b, ap_};
}

QuadExtElement QuadExtElement::scaled(const BigRational& q) const { return {a_.scaled(q), b_.scaled(q), ap_}; }

QuadExtElement QuadExtElement::conj() const { return {a_ + b_.scaled(BigRational(ap_)), -b_, ap_}; }

PAdicNumber QuadExtElement::norm() const {
    QuadExtElement n = *this * conj();
    if (!n.b().is_zero()) fail(ErrorKind::NonRationalResult, "norm has a nonzero alpha component");
    return n.a();
}

bool QuadExtElement::agrees_with(const QuadExtElement& o) const { return a_.agrees_with(o.a_) && b_.agrees_with(o.b_); }

QuadExtElement QuadExtElement::alpha(long a_p, long p, long cap) {
    return {PAdicNumber::exact_zero(p), PAdicNumber::from_integer(1, p, cap), a_p};
}

}  // namespace iwa
