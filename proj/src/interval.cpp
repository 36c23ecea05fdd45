#include "exburgess/interval.hpp"

#include <algorithm>

namespace exburgess {

IntervalReal IntervalReal::pi() { return IntervalReal(BigFloat::pi(MPFR_RNDD), BigFloat::pi(MPFR_RNDU)); }

IntervalReal IntervalReal::e() {
    return IntervalReal(BigFloat::exp(BigFloat(1.0), MPFR_RNDD), BigFloat::exp(BigFloat(1.0), MPFR_RNDU));
}

IntervalReal IntervalReal::euler_gamma() {
    return IntervalReal(BigFloat::euler_gamma(MPFR_RNDD), BigFloat::euler_gamma(MPFR_RNDU));
}

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
    return IntervalReal(BigFloat::add(a.lo_, b.lo_, MPFR_RNDD), BigFloat::add(a.hi_, b.hi_, MPFR_RNDU));
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
    return IntervalReal(BigFloat::sub(a.lo_, b.hi_, MPFR_RNDD), BigFloat::sub(a.hi_, b.lo_, MPFR_RNDU));
}

IntervalReal operator-(const IntervalReal& a) {
    return IntervalReal(BigFloat::neg(a.hi_), BigFloat::neg(a.lo_));
}

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
    // all four endpoint products, rounded both ways
    const BigFloat* as[2] = {&a.lo_, &a.hi_};
    const BigFloat* bs[2] = {&b.lo_, &b.hi_};
    BigFloat lo, hi;
    bool first = true;
    for (auto* x : as)
        for (auto* y : bs) {
            BigFloat d = BigFloat::mul(*x, *y, MPFR_RNDD);
            BigFloat u = BigFloat::mul(*x, *y, MPFR_RNDU);
            if (first) {
                lo = d;
                hi = u;
                first = false;
            } else {
                lo = BigFloat::min(lo, d);
                hi = BigFloat::max(hi, u);
            }
        }
    return IntervalReal(lo, hi);
}

IntervalReal operator/(const IntervalReal& a, const IntervalReal& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by interval containing 0");
    const BigFloat* as[2] = {&a.lo_, &a.hi_};
    const BigFloat* bs[2] = {&b.lo_, &b.hi_};
    BigFloat lo, hi;
    bool first = true;
    for (auto* x : as)
        for (auto* y : bs) {
            BigFloat d = BigFloat::div(*x, *y, MPFR_RNDD);
            BigFloat u = BigFloat::div(*x, *y, MPFR_RNDU);
            if (first) {
                lo = d;
                hi = u;
                first = false;
            } else {
                lo = BigFloat::min(lo, d);
                hi = BigFloat::max(hi, u);
            }
        }
    return IntervalReal(lo, hi);
}

IntervalReal exp_iv(const IntervalReal& a) {
    return IntervalReal(BigFloat::exp(a.lo(), MPFR_RNDD), BigFloat::exp(a.hi(), MPFR_RNDU));
}

IntervalReal log_iv(const IntervalReal& a) {
    if (!(a.lo().sign() > 0)) throw std::domain_error("interval log requires lo > 0");
    return IntervalReal(BigFloat::log(a.lo(), MPFR_RNDD), BigFloat::log(a.hi(), MPFR_RNDU));
}

IntervalReal sqrt_iv(const IntervalReal& a) {
    if (a.lo().sign() < 0) throw std::domain_error("interval sqrt requires lo >= 0");
    return IntervalReal(BigFloat::sqrt(a.lo(), MPFR_RNDD), BigFloat::sqrt(a.hi(), MPFR_RNDU));
}

IntervalReal abs_iv(const IntervalReal& a) {
    if (a.lo().sign() >= 0) return a;
    if (a.hi().sign() <= 0) return -a;
    return IntervalReal(BigFloat(0.0), BigFloat::max(BigFloat::abs(a.lo()), a.hi()));
}

IntervalReal pow_iv(const IntervalReal& x, const IntervalReal& y) { return exp_iv(y * log_iv(x)); }

IntervalReal pow_iv(const IntervalReal& x, const BigRat& y) {
    return exp_iv(IntervalReal::from_rational(y) * log_iv(x));
}

IntervalReal pow_int_iv(const IntervalReal& x, unsigned n) {
    IntervalReal r = IntervalReal::point(1L);
    IntervalReal base = x;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

IntervalReal hull(const IntervalReal& a, const IntervalReal& b) {
    return IntervalReal(BigFloat::min(a.lo(), b.lo()), BigFloat::max(a.hi(), b.hi()));
}

}  // namespace exburgess
