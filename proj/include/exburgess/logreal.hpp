#pragma once

// Signed log-domain number: sign in {-1, 0, +1} plus ln|x| as a 256-bit
// float.  Handles quantities like e^(e^(a(r))) and bounds at q ~ 10^3000
// that overflow any fixed-width linear representation.  Multiplication adds
// log magnitudes; addition goes through log-sum-exp.

#include "exburgess/bigfloat.hpp"

namespace exburgess {

class LogReal {
  public:
    LogReal() : sign_(0), log_mag_(0.0) {}

    static LogReal zero() { return LogReal(); }
    static LogReal one() { return from_log(BigFloat(0.0)); }
    // value = sign * e^(log_magnitude)
    static LogReal from_log(BigFloat log_magnitude, int sign = 1);
    static LogReal from_double(double x);
    static LogReal from_bigfloat(const BigFloat& x);
    static LogReal from_int(const BigInt& n);
    static LogReal from_rational(const BigRat& q);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    // ln|x|; only meaningful for sign != 0.
    const BigFloat& log_magnitude() const;
    BigFloat log10_magnitude() const;
    // May overflow to +/-inf for astronomical values.
    double to_double() const;

    friend LogReal operator*(const LogReal& a, const LogReal& b);
    friend LogReal operator/(const LogReal& a, const LogReal& b);
    friend LogReal operator+(const LogReal& a, const LogReal& b);
    friend LogReal operator-(const LogReal& a, const LogReal& b);
    friend LogReal operator-(const LogReal& a);

    // |x|^e for real exponent e; requires sign > 0 unless e is an integer
    // (only the positive case is needed here, so sign > 0 is enforced).
    LogReal pow(const BigFloat& exponent) const;
    LogReal pow(double exponent) const { return pow(BigFloat(exponent)); }

    friend bool operator<(const LogReal& a, const LogReal& b);
    friend bool operator<=(const LogReal& a, const LogReal& b) { return !(b < a); }
    friend bool operator>(const LogReal& a, const LogReal& b) { return b < a; }
    friend bool operator>=(const LogReal& a, const LogReal& b) { return !(a < b); }

    std::string str(int digits = 20) const;

  private:
    int sign_;
    BigFloat log_mag_;
};

}  // namespace exburgess
