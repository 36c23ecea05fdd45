#include "exburgess/arith.hpp"

#include <algorithm>
#include <numeric>

namespace exburgess {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on signed 128-bit to dodge overflow for m near 2^62
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("inv_mod: arguments not coprime");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin base set for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::uint64_t brent_rho(std::uint64_t n, std::uint64_t seed_c) {
    // Brent's cycle-finding variant of Pollard rho; returns a nontrivial factor
    // of composite odd n, or n on failure for this c (caller retries).
    if (n % 2 == 0) return 2;
    std::uint64_t y = seed_c % n, c = seed_c % n, m = 128;
    if (c == 0) c = 1;
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = (mul_mod(y, y, n) + c) % n;
                std::uint64_t diff = x > y ? x - y : y - x;
                q = mul_mod(q, diff == 0 ? 1 : diff, n);
            }
            g = gcd_u64(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            ys = (mul_mod(ys, ys, n) + c) % n;
            std::uint64_t diff = x > ys ? x - ys : ys - x;
            g = gcd_u64(diff, n);
        }
    }
    return g;
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = n;
    for (std::uint64_t c = 1; d == n; ++c) d = brent_rho(n, c);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
    FactoredInteger f;
    BigInt v = 1;
    std::uint64_t last = 0;
    for (const auto& pp : factors) {
        if (pp.prime <= last || pp.exponent == 0)
            throw std::invalid_argument("from_factors: factors must be sorted with positive exponents");
        last = pp.prime;
        for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
    }
    f.value_ = v;
    f.factors_ = std::move(factors);
    return f;
}

std::uint64_t FactoredInteger::value_u64() const {
    if (value_ > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::domain_error("value does not fit in 64 bits");
    return static_cast<std::uint64_t>(value_);
}

FactoredInteger factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: input must be a positive integer");
    if (n > (std::uint64_t(1) << 62)) throw std::domain_error("factorize: input exceeds supported range 2^62");
    std::vector<std::uint64_t> primes;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p <= 1000000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> factors;
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        factors.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    return FactoredInteger::from_factors(std::move(factors));
}

FactoredInteger factorize(const BigInt& n) {
    if (n <= 0) throw std::domain_error("factorize: input must be a positive integer");
    if (n > BigInt(std::uint64_t(1) << 62))
        throw std::domain_error("factorize: input exceeds supported range 2^62");
    return factorize(static_cast<std::uint64_t>(n));
}

BigInt euler_phi(const FactoredInteger& f) {
    BigInt phi = 1;
    for (const auto& pp : f.factors()) {
        BigInt pe = 1;
        for (unsigned i = 0; i + 1 < pp.exponent; ++i) pe *= pp.prime;
        phi *= pe * (BigInt(pp.prime) - 1);
    }
    return phi;
}

BigInt binomial_bigint(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

BigInt tau_k(const FactoredInteger& f, unsigned k) {
    if (k < 2) throw std::invalid_argument("tau_k: k must be >= 2");
    BigInt t = 1;
    for (const auto& pp : f.factors()) t *= binomial_bigint(pp.exponent + k - 1, k - 1);
    return t;
}

int mobius(const FactoredInteger& f) {
    for (const auto& pp : f.factors())
        if (pp.exponent >= 2) return 0;
    return (f.factors().size() % 2 == 0) ? 1 : -1;
}

bool is_cubefree(const FactoredInteger& f) {
    for (const auto& pp : f.factors())
        if (pp.exponent >= 3) return false;
    return true;
}

BigRat m_r_exact(const FactoredInteger& f, unsigned r) {
    if (r < 2) throw std::invalid_argument("m_r: r must be >= 2");
    BigRat a(tau_k(f, 2 * r));
    BigRat half_tau = BigRat(tau_k(f, 2)) / 2;
    BigRat b = 1;
    for (unsigned i = 0; i < 2 * r - 1; ++i) b *= half_tau;
    BigRat c = BigRat(f.value()) / (2 * r);
    return std::min({a, b, c});
}

double m_r(const FactoredInteger& f, unsigned r) { return to_double(m_r_exact(f, r)); }

double to_double(const BigRat& x) { return x.convert_to<double>(); }
double to_double(const BigInt& x) { return x.convert_to<double>(); }

std::vector<std::uint64_t> divisors_u64(const FactoredInteger& f) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& pp : f.factors()) {
        std::size_t n = divs.size();
        std::uint64_t pe = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

SieveTables::SieveTables(std::uint32_t limit) : mu(limit + 1, 1), phi(limit + 1) {
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint32_t i = 0; i <= limit; ++i) phi[i] = i;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = i;
                phi[j] -= phi[j] / i;
            }
        }
    }
    mu[0] = 0;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        std::uint32_t p = spf[i];
        std::uint32_t m = i / p;
        mu[i] = (m % p == 0) ? 0 : static_cast<std::int8_t>(-mu[m]);
    }
}

}  // namespace exburgess
