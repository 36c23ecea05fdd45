#include "exburgess/logreal.hpp"

#include <cmath>

namespace exburgess {

LogReal LogReal::from_log(BigFloat log_magnitude, int sign) {
    if (sign == 0) return LogReal();
    LogReal r;
    r.sign_ = sign > 0 ? 1 : -1;
    r.log_mag_ = std::move(log_magnitude);
    return r;
}

LogReal LogReal::from_double(double x) {
    if (x == 0.0) return LogReal();
    return from_log(log_bf(BigFloat(std::fabs(x))), x > 0 ? 1 : -1);
}

LogReal LogReal::from_bigfloat(const BigFloat& x) {
    if (x.is_zero()) return LogReal();
    return from_log(log_bf(BigFloat::abs(x)), x.sign());
}

LogReal LogReal::from_int(const BigInt& n) {
    if (n == 0) return LogReal();
    return from_log(log_bf(BigFloat(boost::multiprecision::abs(n))), n > 0 ? 1 : -1);
}

LogReal LogReal::from_rational(const BigRat& q) {
    if (q == 0) return LogReal();
    BigFloat num = log_bf(BigFloat(boost::multiprecision::abs(boost::multiprecision::numerator(q))));
    BigFloat den = log_bf(BigFloat(boost::multiprecision::denominator(q)));
    return from_log(num - den, q > 0 ? 1 : -1);
}

const BigFloat& LogReal::log_magnitude() const {
    if (sign_ == 0) throw std::domain_error("log_magnitude of zero");
    return log_mag_;
}

BigFloat LogReal::log10_magnitude() const { return log_magnitude() / log_bf(BigFloat(10.0)); }

double LogReal::to_double() const {
    if (sign_ == 0) return 0.0;
    double m = BigFloat::exp(log_mag_, MPFR_RNDN).to_double();
    return sign_ > 0 ? m : -m;
}

LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return LogReal();
    return LogReal::from_log(a.log_mag_ + b.log_mag_, a.sign_ * b.sign_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
    if (b.sign_ == 0) throw std::domain_error("LogReal division by zero");
    if (a.sign_ == 0) return LogReal();
    return LogReal::from_log(a.log_mag_ - b.log_mag_, a.sign_ * b.sign_);
}

LogReal operator-(const LogReal& a) {
    if (a.sign_ == 0) return a;
    return LogReal::from_log(a.log_mag_, -a.sign_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    // order so that |big| >= |small|
    const LogReal& big = (a.log_mag_ >= b.log_mag_) ? a : b;
    const LogReal& small = (a.log_mag_ >= b.log_mag_) ? b : a;
    BigFloat t = exp_bf(small.log_mag_ - big.log_mag_);  // in (0, 1]
    if (big.sign_ == small.sign_)
        return LogReal::from_log(big.log_mag_ + log1p_bf(t), big.sign_);
    // opposite signs: |result| = |big| * (1 - t)
    BigFloat one_minus = BigFloat(1.0) - t;
    if (one_minus.is_zero()) return LogReal();
    return LogReal::from_log(big.log_mag_ + log_bf(one_minus), big.sign_);
}

LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

LogReal LogReal::pow(const BigFloat& exponent) const {
    if (sign_ == 0) {
        if (exponent.sign() <= 0) throw std::domain_error("LogReal: 0^e with e <= 0");
        return LogReal();
    }
    if (sign_ < 0) throw std::domain_error("LogReal::pow requires a positive base");
    return from_log(log_mag_ * exponent, 1);
}

bool operator<(const LogReal& a, const LogReal& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    if (a.sign_ == 0) return false;
    if (a.sign_ > 0) return a.log_mag_ < b.log_mag_;
    return b.log_mag_ < a.log_mag_;
}

std::string LogReal::str(int digits) const {
    if (sign_ == 0) return "0";
    std::string s = (sign_ < 0) ? "-exp(" : "exp(";
    return s + log_mag_.str(digits) + ")";
}

}  // namespace exburgess
