#include <doctest.h>

#include <random>

#include "exburgess/interval.hpp"
#include "exburgess/logreal.hpp"

using namespace exburgess;

namespace {

// reference constants, computed independently at high precision
const char* kPi60 = "3.14159265358979323846264338327950288419716939937510582097494";
const char* kE60 = "2.71828182845904523536028747135266249775724709369995957496697";
const char* kGamma60 = "0.577215664901532860606512090082402431042159335939923598805767";

BigFloat bf(const char* s) { return BigFloat(std::string(s)); }

}  // namespace

TEST_CASE("pi e gamma enclosures") {
    // enclosures are far tighter than the 60-digit reference literals, so
    // compare midpoints at the literal's precision and the width separately
    IntervalReal pi = IntervalReal::pi();
    CHECK(BigFloat::abs(pi.mid() - bf(kPi60)) < BigFloat(1e-58));
    CHECK(pi.width() < BigFloat(1e-50));

    IntervalReal e = IntervalReal::e();
    CHECK(BigFloat::abs(e.mid() - bf(kE60)) < BigFloat(1e-58));
    CHECK(BigFloat::abs(exp_iv(IntervalReal::point(1L)).mid() - bf("2.718281828459045")) <
          BigFloat(1e-15));

    IntervalReal g = IntervalReal::euler_gamma();
    CHECK(BigFloat::abs(g.mid() - bf(kGamma60)) < BigFloat(1e-58));
}

TEST_CASE("interval basic arithmetic") {
    IntervalReal three = IntervalReal::point(1L) + IntervalReal::point(2L);
    CHECK(three.contains(BigFloat(3.0)));
    CHECK(three.width() < BigFloat(1e-70));

    IntervalReal r = IntervalReal::from_rational(BigRat(1, 3));
    CHECK(r.lo() < r.hi());  // 1/3 is not exactly representable
    CHECK((r * IntervalReal::point(3L)).contains(BigFloat(1.0)));

    CHECK_THROWS_AS(IntervalReal::point(1L) / IntervalReal(BigFloat(-1.0), BigFloat(1.0)),
                    std::domain_error);
    CHECK_THROWS_AS(log_iv(IntervalReal(BigFloat(0.0), BigFloat(1.0))), std::domain_error);

    IntervalReal neg = -IntervalReal(BigFloat(1.0), BigFloat(2.0));
    CHECK(neg.lo() == BigFloat(-2.0));
    CHECK(neg.hi() == BigFloat(-1.0));

    CHECK(abs_iv(IntervalReal(BigFloat(-3.0), BigFloat(1.0))).hi() == BigFloat(3.0));
    CHECK(pow_int_iv(IntervalReal(BigFloat(-2.0), BigFloat(-2.0)), 3).contains(BigFloat(-8.0)));
}

TEST_CASE("interval containment under random op chains") {
    // pointwise evaluation at higher precision stays inside the interval
    constexpr mpfr_prec_t kRefBits = 320;
    std::mt19937_64 rng(12345);
    auto rand_double = [&] { return (static_cast<double>(rng() >> 11) * 0x1.0p-53) * 8.0 + 0.25; };

    for (int iter = 0; iter < 2000; ++iter) {
        double a = rand_double(), b = rand_double();
        IntervalReal x = IntervalReal::point(a);
        IntervalReal y = IntervalReal::point(b);
        mpfr_t rx, ry;
        mpfr_init2(rx, kRefBits);
        mpfr_init2(ry, kRefBits);
        mpfr_set_d(rx, a, MPFR_RNDN);
        mpfr_set_d(ry, b, MPFR_RNDN);
        for (int step = 0; step < 5; ++step) {
            switch (rng() % 6) {
                case 0: x = x + y; mpfr_add(rx, rx, ry, MPFR_RNDN); break;
                case 1: x = x - y; mpfr_sub(rx, rx, ry, MPFR_RNDN); break;
                case 2: x = x * y; mpfr_mul(rx, rx, ry, MPFR_RNDN); break;
                case 3: x = x / y; mpfr_div(rx, rx, ry, MPFR_RNDN); break;
                case 4:
                    x = exp_iv(x * IntervalReal::from_rational(BigRat(1, 16)));
                    mpfr_div_ui(rx, rx, 16, MPFR_RNDN);
                    mpfr_exp(rx, rx, MPFR_RNDN);
                    break;
                default:
                    x = log_iv(abs_iv(x) + IntervalReal::point(1L));
                    mpfr_abs(rx, rx, MPFR_RNDN);
                    mpfr_add_ui(rx, rx, 1, MPFR_RNDN);
                    mpfr_log(rx, rx, MPFR_RNDN);
                    break;
            }
            BigFloat ref;
            mpfr_set(ref.raw(), rx, MPFR_RNDN);
            CHECK(x.contains(ref));
        }
        mpfr_clears(rx, ry, nullptr);
    }
}

TEST_CASE("interval pow") {
    IntervalReal two = IntervalReal::point(2L);
    CHECK(pow_iv(two, BigRat(1, 2)).contains(bf("1.41421356237309504880168872420969807856967187537694")));
    CHECK(pow_iv(two, IntervalReal::point(10L)).contains(BigFloat(1024.0)));
    CHECK_THROWS_AS(pow_iv(IntervalReal(BigFloat(-1.0), BigFloat(1.0)), BigRat(1, 2)),
                    std::domain_error);
}

TEST_CASE("logreal multiplication and powers") {
    LogReal a = LogReal::from_double(3.0);
    LogReal b = LogReal::from_double(4.0);
    CHECK((a * b).to_double() == doctest::Approx(12.0).epsilon(1e-14));
    CHECK((a / b).to_double() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(a.pow(2.0).to_double() == doctest::Approx(9.0).epsilon(1e-14));

    // astronomically large values survive in log space
    LogReal huge = LogReal::from_log(BigFloat(1e6));
    LogReal huge2 = huge * huge;
    CHECK(huge2.log_magnitude().to_double() == doctest::Approx(2e6));
    CHECK((huge2 / huge).log_magnitude().to_double() == doctest::Approx(1e6));
}

TEST_CASE("logreal addition via log-sum-exp") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 500; ++i) {
        double a = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 100.0;
        double b = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 100.0;
        if (a == 0 || b == 0 || a + b == 0) continue;
        LogReal s = LogReal::from_double(a) + LogReal::from_double(b);
        CHECK(s.to_double() == doctest::Approx(a + b).epsilon(1e-12));
        LogReal d = LogReal::from_double(a) - LogReal::from_double(b);
        CHECK(d.to_double() == doctest::Approx(a - b).epsilon(1e-12));
    }
    // exact cancellation collapses to zero
    CHECK((LogReal::from_double(5.0) - LogReal::from_double(5.0)).is_zero());
    // adding one to an astronomical value is absorbed but stays finite
    LogReal big = LogReal::from_log(BigFloat(5000.0));
    CHECK((big + LogReal::one()).log_magnitude().to_double() == doctest::Approx(5000.0));
}

TEST_CASE("logreal comparisons and signs") {
    CHECK(LogReal::from_double(2.0) < LogReal::from_double(3.0));
    CHECK(LogReal::from_double(-3.0) < LogReal::from_double(-2.0));
    CHECK(LogReal::from_double(-1.0) < LogReal::from_double(1.0));
    CHECK(LogReal::zero() < LogReal::one());
    CHECK(LogReal::from_int(BigInt(1) << 200).log_magnitude().to_double() ==
          doctest::Approx(200 * std::log(2.0)));
    CHECK(LogReal::from_rational(BigRat(1, 3)).to_double() == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(LogReal::from_double(-2.0).pow(0.5), std::domain_error);
    CHECK_THROWS_AS(LogReal::zero().log_magnitude(), std::domain_error);
}

TEST_CASE("bigfloat parsing and formatting") {
    BigFloat x("1.5");
    CHECK(x.to_double() == 1.5);
    CHECK((x + x).to_double() == 3.0);
    CHECK(BigFloat::max(BigFloat(2.0), BigFloat(3.0)).to_double() == 3.0);
    CHECK(pow_bf(BigFloat(2.0), BigFloat(0.5)).to_double() == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(BigFloat(std::string("not-a-number")), std::invalid_argument);
}
