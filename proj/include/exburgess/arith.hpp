#pragma once

// Exact integer factorization and the multiplicative arithmetic functions
// (phi, tau_k, omega, mu, cubefree test, m_r) that the rest of the toolkit
// consumes.  Factorization is trial division plus Brent's rho with
// deterministic retry seeds; intended input range is moduli up to ~10^12
// (hard cap 2^62), not cryptographic sizes.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace exburgess {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

// A positive integer together with its full prime factorization.
// Invariants: primes strictly increasing, exponents >= 1, product of
// prime^exponent equals value; value == 1 iff factors empty.
class FactoredInteger {
  public:
    FactoredInteger() : value_(1) {}

    const BigInt& value() const { return value_; }
    std::uint64_t value_u64() const;
    const std::vector<PrimePower>& factors() const { return factors_; }

    bool operator==(const FactoredInteger&) const = default;

    // Only factorize() and the checked constructor below build these.
    static FactoredInteger from_factors(std::vector<PrimePower> factors);

  private:
    BigInt value_;
    std::vector<PrimePower> factors_;
};

// Rejects n <= 0 with std::domain_error; rejects n > 2^62 (outside the
// supported desk-scale range).  Deterministic.
FactoredInteger factorize(const BigInt& n);
FactoredInteger factorize(std::uint64_t n);

BigInt euler_phi(const FactoredInteger& f);

// Number of ways to write f as an ordered product of k integers;
// multiplicative, binomial(e+k-1, k-1) on prime powers p^e.  Requires k >= 2.
BigInt tau_k(const FactoredInteger& f, unsigned k);

inline unsigned omega(const FactoredInteger& f) {
    return static_cast<unsigned>(f.factors().size());
}

int mobius(const FactoredInteger& f);
bool is_cubefree(const FactoredInteger& f);

// m_r(q) = min{ tau_{2r}(q), (tau(q)/2)^{2r-1}, q/(2r) } as an exact rational.
// (tau(q)/2)^{2r-1} may be a half-integer power when tau(q) is odd.
// Requires r >= 2.
BigRat m_r_exact(const FactoredInteger& f, unsigned r);
double m_r(const FactoredInteger& f, unsigned r);

std::vector<std::uint64_t> divisors_u64(const FactoredInteger& f);

double to_double(const BigRat& x);
double to_double(const BigInt& x);

// Smallest-prime-factor driven tables of mu(n) and phi(n) for 1 <= n <= limit.
struct SieveTables {
    std::vector<std::int8_t> mu;
    std::vector<std::uint64_t> phi;
    explicit SieveTables(std::uint32_t limit);
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// Inverse of a mod m; requires gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);

BigInt binomial_bigint(std::uint64_t n, std::uint64_t k);

}  // namespace exburgess
