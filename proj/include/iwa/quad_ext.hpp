#pragma once

#include "iwa/padic.hpp"

namespace iwa {

// a + b*alpha with alpha^2 = a_p*alpha - p.
class QuadExtElement {
public:
    QuadExtElement(PAdicNumber a, PAdicNumber b, long a_p);

    const PAdicNumber& a() const { return a_; }
    const PAdicNumber& b() const { return b_; }
    long a_p() const { return ap_; }
    long prime() const { return a_.prime(); }

    QuadExtElement operator+(const QuadExtElement& o) const;
    QuadExtElement operator-(const QuadExtElement& o) const;
    QuadExtElement operator*(const QuadExtElement& o) const;
    QuadExtElement scaled(const BigRational& q) const;
    // alpha -> a_p - alpha.
    QuadExtElement conj() const;
    PAdicNumber norm() const;
    bool agrees_with(const QuadExtElement& o) const;

    static QuadExtElement alpha(long a_p, long p, long cap);

private:
    PAdicNumber a_, b_;
    long ap_;
};

}  // namespace iwa
