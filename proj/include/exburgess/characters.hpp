#pragma once

// Dirichlet characters mod q represented by exponent coordinates on
// generators of (Z/qZ)*.  One component per prime power of q; odd prime
// powers get a primitive root, 2^e for e >= 3 gets the pair (-1, 5).
// Discrete logs are tabulated per component at construction, so character
// evaluation costs O(omega(q)) lookups.

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "exburgess/arith.hpp"

namespace exburgess {

// Exact root of unity e^(2*pi*i*num/den) with 0 <= num < den and
// gcd(num, den) = 1 unless num = 0, or the zero marker.
struct CharacterValue {
    bool zero = true;
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static CharacterValue zero_value() { return {}; }
    static CharacterValue root(std::uint64_t num, std::uint64_t den);
    bool is_one() const { return !zero && num == 0; }
    std::complex<double> to_complex() const;
    CharacterValue conj() const;
    CharacterValue operator*(const CharacterValue& o) const;
    bool operator==(const CharacterValue&) const = default;
};

struct UnitGroupComponent {
    std::uint64_t prime_power;  // p^e
    std::uint64_t prime;
    unsigned exponent;                      // e
    std::vector<std::uint64_t> generators;  // 0, 1, or 2 residues mod p^e
    std::vector<std::uint64_t> orders;      // matching multiplicative orders
    // dlog_flat[r * generators.size() + j] = exponent of generator j for the
    // residue r (coprime to p only); kInvalid marks non-units.
    std::vector<std::uint32_t> dlog_flat;
    static constexpr std::uint32_t kInvalid = 0xffffffffu;
};

class UnitGroup {
  public:
    explicit UnitGroup(FactoredInteger modulus);

    const FactoredInteger& modulus() const { return modulus_; }
    std::uint64_t q() const { return q_; }
    const std::vector<UnitGroupComponent>& components() const { return comps_; }
    const BigInt& phi() const { return phi_; }
    std::uint64_t phi_u64() const { return static_cast<std::uint64_t>(phi_); }
    // orders of all generators, concatenated in component order
    const std::vector<std::uint64_t>& generator_orders() const { return gen_orders_; }

    // Per-component (coprimality flag, dlog coordinates) for n mod q.
    bool is_unit(std::int64_t n) const;

  private:
    FactoredInteger modulus_;
    std::uint64_t q_;
    BigInt phi_;
    std::vector<UnitGroupComponent> comps_;
    std::vector<std::uint64_t> gen_orders_;
    friend class DirichletCharacter;
};

class DirichletCharacter {
  public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents);

    const UnitGroup& group() const { return *group_; }
    std::uint64_t modulus() const { return group_->q(); }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == group_->q(); }
    bool is_principal() const;

    CharacterValue eval(std::int64_t n) const;

  private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::uint64_t> exponents_;
    std::uint64_t conductor_;
};

std::shared_ptr<const UnitGroup> unit_group(const FactoredInteger& q);

// All phi(q) characters in lexicographic order of the exponent vectors, or
// only those with conductor q when primitive_only is set.
std::vector<DirichletCharacter> enumerate_characters(const FactoredInteger& q, bool primitive_only);

// S_chi(M, N) = sum over M < n <= M+N of chi(n), accumulated in doubles.
std::complex<double> char_sum(const DirichletCharacter& chi, std::int64_t M, std::uint64_t N);

// sum over x mod q of chi(f1(x) * f2(x)^(phi(q)-1)) for f1 built from the
// first r shifts and f2 from the rest; literal evaluation with pow_mod.
// Tuple length must be exactly 2r.
std::complex<double> complete_poly_sum(const DirichletCharacter& chi,
                                       const std::vector<std::int64_t>& shifts, unsigned r);

// Number of primitive characters mod q: sum over d | q of mu(q/d) phi(d).
BigInt primitive_character_count(const FactoredInteger& q);

// Order of g in (Z/modulus)*, given a multiple group_order of it.
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t modulus, std::uint64_t group_order);

}  // namespace exburgess
