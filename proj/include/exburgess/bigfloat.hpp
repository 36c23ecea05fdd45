#pragma once

// RAII value wrapper around mpfr_t at a fixed working precision of 256 bits
// (about 77 decimal digits; the toolkit's contract is >= 60 significant
// digits everywhere).  Operators round to nearest; the rnd-taking static
// methods exist for the directed-rounding interval layer.

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "exburgess/arith.hpp"

namespace exburgess {

class BigFloat {
  public:
    static constexpr mpfr_prec_t kBits = 256;

    BigFloat() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
    explicit BigFloat(double x) : BigFloat() { mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit BigFloat(long x) : BigFloat() { mpfr_set_si(v_, x, MPFR_RNDN); }
    explicit BigFloat(unsigned long x) : BigFloat() { mpfr_set_ui(v_, x, MPFR_RNDN); }
    explicit BigFloat(int x) : BigFloat(static_cast<long>(x)) {}
    // Parses a decimal literal exactly into the working precision.
    explicit BigFloat(const std::string& s, mpfr_rnd_t rnd = MPFR_RNDN) : BigFloat() {
        if (mpfr_set_str(v_, s.c_str(), 10, rnd) != 0 && mpfr_nan_p(v_))
            throw std::invalid_argument("BigFloat: bad literal " + s);
    }
    explicit BigFloat(const BigInt& x, mpfr_rnd_t rnd = MPFR_RNDN) : BigFloat() {
        mpfr_set_str(v_, x.str().c_str(), 10, rnd);
    }

    BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kBits); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    static BigFloat from_rational(const BigRat& q, mpfr_rnd_t rnd);

    // rnd-controlled primitives used by the interval layer
    static BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
    static BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
    static BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
    static BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
    static BigFloat sqrt(const BigFloat& a, mpfr_rnd_t rnd);
    static BigFloat exp(const BigFloat& a, mpfr_rnd_t rnd);
    static BigFloat log(const BigFloat& a, mpfr_rnd_t rnd);
    static BigFloat pi(mpfr_rnd_t rnd);
    static BigFloat euler_gamma(mpfr_rnd_t rnd);
    static BigFloat neg(const BigFloat& a);
    static BigFloat abs(const BigFloat& a);
    static BigFloat min(const BigFloat& a, const BigFloat& b);
    static BigFloat max(const BigFloat& a, const BigFloat& b);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return add(a, b, MPFR_RNDN); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return sub(a, b, MPFR_RNDN); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return mul(a, b, MPFR_RNDN); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return div(a, b, MPFR_RNDN); }
    friend BigFloat operator-(const BigFloat& a) { return neg(a); }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  private:
    mpfr_t v_;
};

BigFloat exp_bf(const BigFloat& a);
BigFloat log_bf(const BigFloat& a);
BigFloat sqrt_bf(const BigFloat& a);
// a^b for a > 0 (and the exact special cases b integer handled by mpfr).
BigFloat pow_bf(const BigFloat& a, const BigFloat& b);
BigFloat log1p_bf(const BigFloat& a);

}  // namespace exburgess
