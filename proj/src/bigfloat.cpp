#include "exburgess/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace exburgess {

std::string BigFloat::str(int digits) const {
    char buf[160];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
    return std::string(buf);
}

BigFloat BigFloat::from_rational(const BigRat& q, mpfr_rnd_t rnd) {
    BigFloat num(boost::multiprecision::numerator(q), rnd);
    BigFloat den(boost::multiprecision::denominator(q),
                 rnd == MPFR_RNDU ? MPFR_RNDD : (rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDN));
    return div(num, den, rnd);
}

#define EXB_BINOP(name, fn)                                                        \
    BigFloat BigFloat::name(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) { \
        BigFloat r;                                                                \
        fn(r.v_, a.v_, b.v_, rnd);                                                 \
        return r;                                                                  \
    }

EXB_BINOP(add, mpfr_add)
EXB_BINOP(sub, mpfr_sub)
EXB_BINOP(mul, mpfr_mul)
EXB_BINOP(div, mpfr_div)
#undef EXB_BINOP

BigFloat BigFloat::sqrt(const BigFloat& a, mpfr_rnd_t rnd) {
    BigFloat r;
    mpfr_sqrt(r.v_, a.v_, rnd);
    return r;
}
BigFloat BigFloat::exp(const BigFloat& a, mpfr_rnd_t rnd) {
    BigFloat r;
    mpfr_exp(r.v_, a.v_, rnd);
    return r;
}
BigFloat BigFloat::log(const BigFloat& a, mpfr_rnd_t rnd) {
    BigFloat r;
    mpfr_log(r.v_, a.v_, rnd);
    return r;
}
BigFloat BigFloat::pi(mpfr_rnd_t rnd) {
    BigFloat r;
    mpfr_const_pi(r.v_, rnd);
    return r;
}
BigFloat BigFloat::euler_gamma(mpfr_rnd_t rnd) {
    BigFloat r;
    mpfr_const_euler(r.v_, rnd);
    return r;
}
BigFloat BigFloat::neg(const BigFloat& a) {
    BigFloat r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::abs(const BigFloat& a) {
    BigFloat r;
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }
BigFloat BigFloat::max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }

BigFloat exp_bf(const BigFloat& a) { return BigFloat::exp(a, MPFR_RNDN); }
BigFloat log_bf(const BigFloat& a) { return BigFloat::log(a, MPFR_RNDN); }
BigFloat sqrt_bf(const BigFloat& a) { return BigFloat::sqrt(a, MPFR_RNDN); }

BigFloat pow_bf(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat log1p_bf(const BigFloat& a) {
    BigFloat r;
    mpfr_log1p(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

}  // namespace exburgess
