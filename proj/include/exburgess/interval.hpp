#pragma once

// Outward-rounded interval arithmetic on 256-bit floats.  Containment
// contract: the result interval of every operation contains the exact
// mathematical result applied to any points of the input intervals.
// Division requires a denominator not containing 0; log requires lo > 0.

#include "exburgess/bigfloat.hpp"

namespace exburgess {

class IntervalReal {
  public:
    IntervalReal() : lo_(0.0), hi_(0.0) {}
    IntervalReal(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (!(lo_ <= hi_)) throw std::invalid_argument("IntervalReal: lo > hi");
    }
    // Point interval; doubles and small integers are exactly representable.
    static IntervalReal point(double x) { return IntervalReal(BigFloat(x), BigFloat(x)); }
    static IntervalReal point(long x) { return IntervalReal(BigFloat(x), BigFloat(x)); }
    static IntervalReal from_int(const BigInt& n) {
        return IntervalReal(BigFloat(n, MPFR_RNDD), BigFloat(n, MPFR_RNDU));
    }
    static IntervalReal from_rational(const BigRat& q) {
        return IntervalReal(BigFloat::from_rational(q, MPFR_RNDD), BigFloat::from_rational(q, MPFR_RNDU));
    }
    // Decimal literal, outward rounded (use for constants like 1.38402).
    static IntervalReal from_decimal(const std::string& s) {
        return IntervalReal(BigFloat(s, MPFR_RNDD), BigFloat(s, MPFR_RNDU));
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    BigFloat mid() const { return (lo_ + hi_) * BigFloat(0.5); }
    BigFloat width() const { return BigFloat::sub(hi_, lo_, MPFR_RNDU); }
    bool contains(const BigFloat& x) const { return lo_ <= x && x <= hi_; }
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    static IntervalReal pi();
    static IntervalReal e();
    static IntervalReal euler_gamma();

    friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a);

    IntervalReal& operator+=(const IntervalReal& b) { return *this = *this + b; }
    IntervalReal& operator-=(const IntervalReal& b) { return *this = *this - b; }
    IntervalReal& operator*=(const IntervalReal& b) { return *this = *this * b; }

  private:
    BigFloat lo_, hi_;
};

IntervalReal exp_iv(const IntervalReal& a);
IntervalReal log_iv(const IntervalReal& a);
IntervalReal sqrt_iv(const IntervalReal& a);
IntervalReal abs_iv(const IntervalReal& a);
// x^y = exp(y log x); requires x.lo > 0.
IntervalReal pow_iv(const IntervalReal& x, const IntervalReal& y);
IntervalReal pow_iv(const IntervalReal& x, const BigRat& y);
// x^n by repeated multiplication; any sign of x, n >= 0.
IntervalReal pow_int_iv(const IntervalReal& x, unsigned n);
IntervalReal hull(const IntervalReal& a, const IntervalReal& b);

}  // namespace exburgess
