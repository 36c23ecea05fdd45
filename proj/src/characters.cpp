#include "exburgess/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace exburgess {

CharacterValue CharacterValue::root(std::uint64_t num, std::uint64_t den) {
    CharacterValue v;
    v.zero = false;
    num %= den;
    std::uint64_t g = gcd_u64(num, den);
    if (num == 0) {
        v.num = 0;
        v.den = 1;
    } else {
        v.num = num / g;
        v.den = den / g;
    }
    return v;
}

std::complex<double> CharacterValue::to_complex() const {
    if (zero) return {0.0, 0.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

CharacterValue CharacterValue::conj() const {
    if (zero || num == 0) return *this;
    return root(den - num, den);
}

CharacterValue CharacterValue::operator*(const CharacterValue& o) const {
    if (zero || o.zero) return zero_value();
    // num/den + o.num/o.den mod 1
    std::uint64_t g = gcd_u64(den, o.den);
    std::uint64_t l = den / g * o.den;
    unsigned __int128 s = static_cast<unsigned __int128>(num) * (l / den) +
                          static_cast<unsigned __int128>(o.num) * (l / o.den);
    return root(static_cast<std::uint64_t>(s % l), l);
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t find_primitive_root(std::uint64_t p, unsigned e) {
    std::uint64_t pe = pow_u64(p, e);
    std::uint64_t phi = pe / p * (p - 1);
    FactoredInteger phi_f = factorize(p - 1);
    // primitive root mod p first
    std::uint64_t g = 0;
    for (std::uint64_t cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (const auto& pp : phi_f.factors()) {
            if (pow_mod(cand, (p - 1) / pp.prime, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (e == 1) return g;
    // lift: g works mod p^e unless g^(p-1) = 1 mod p^2, in which case g+p does
    std::uint64_t p2 = p * p;
    if (pow_mod(g, p - 1, p2) == 1) g += p;
    (void)phi;
    return g % pe;
}

}  // namespace

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t modulus, std::uint64_t group_order) {
    // order divides group_order; strip prime factors greedily
    std::uint64_t ord = group_order;
    FactoredInteger of = factorize(group_order);
    for (const auto& pp : of.factors()) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            if (pow_mod(g, ord / pp.prime, modulus) == 1)
                ord /= pp.prime;
            else
                break;
        }
    }
    return ord;
}

namespace {

void fill_dlog(UnitGroupComponent& c) {
    std::size_t ng = c.generators.size();
    c.dlog_flat.assign(c.prime_power * std::max<std::size_t>(ng, 1), UnitGroupComponent::kInvalid);
    if (ng == 0) return;
    // enumerate all exponent tuples; total = product of orders = phi(p^e)
    std::vector<std::uint64_t> exps(ng, 0);
    std::uint64_t x = 1;
    // iterate last generator fastest, multiplying incrementally
    std::uint64_t total = 1;
    for (auto o : c.orders) total *= o;
    for (std::uint64_t count = 0;; ++count) {
        for (std::size_t j = 0; j < ng; ++j)
            c.dlog_flat[x * ng + j] = static_cast<std::uint32_t>(exps[j]);
        if (count + 1 == total) break;
        // increment tuple, updating x by one generator multiplication each step
        std::size_t j = ng;
        while (j-- > 0) {
            ++exps[j];
            x = mul_mod(x, c.generators[j], c.prime_power);
            if (exps[j] < c.orders[j]) break;
            // wrapped: x has absorbed generators[j]^orders[j] = 1, reset exponent
            exps[j] = 0;
        }
    }
}

}  // namespace

UnitGroup::UnitGroup(FactoredInteger modulus) : modulus_(std::move(modulus)) {
    q_ = modulus_.value_u64();
    if (q_ == 0) throw std::domain_error("UnitGroup: modulus must be >= 1");
    if (q_ > (1ull << 24))
        throw std::domain_error("UnitGroup: modulus too large for table-driven evaluation");
    phi_ = euler_phi(modulus_);
    for (const auto& pp : modulus_.factors()) {
        UnitGroupComponent c;
        c.prime = pp.prime;
        c.exponent = pp.exponent;
        c.prime_power = pow_u64(pp.prime, pp.exponent);
        if (pp.prime == 2) {
            if (pp.exponent == 2) {
                c.generators = {3};  // -1 mod 4
                c.orders = {2};
            } else if (pp.exponent >= 3) {
                c.generators = {c.prime_power - 1, 5};  // -1 and 5
                c.orders = {2, c.prime_power / 4};
            }
            // 2^1: trivial unit group, no generators
        } else {
            std::uint64_t g = find_primitive_root(pp.prime, pp.exponent);
            c.generators = {g};
            c.orders = {c.prime_power / pp.prime * (pp.prime - 1)};
        }
        fill_dlog(c);
        for (auto o : c.orders) gen_orders_.push_back(o);
        comps_.push_back(std::move(c));
    }
}

bool UnitGroup::is_unit(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return gcd_u64(static_cast<std::uint64_t>(r), q_) == 1;
}

std::shared_ptr<const UnitGroup> unit_group(const FactoredInteger& q) {
    return std::make_shared<UnitGroup>(q);
}

namespace {

// conductor contribution of one component given its exponent coordinates
std::uint64_t component_conductor(const UnitGroupComponent& c, const std::uint64_t* exps) {
    if (c.generators.empty()) return 1;  // 2^1
    if (c.prime == 2 && c.exponent >= 3) {
        std::uint64_t a_neg = exps[0], a5 = exps[1];
        if (a5 != 0) {
            unsigned v = 0;
            std::uint64_t t = a5;
            while ((t & 1) == 0) {
                ++v;
                t >>= 1;
            }
            std::uint64_t f = c.prime_power >> v;  // 2^(e-v), v <= e-3
            return f;
        }
        return a_neg ? 4 : 1;
    }
    // cyclic case (odd p^e, or 2^2)
    std::uint64_t a = exps[0];
    if (a == 0) return 1;
    if (c.prime == 2) return 4;  // 2^2, a = 1
    unsigned v = 0;
    std::uint64_t t = a;
    while (t % c.prime == 0) {
        ++v;
        t /= c.prime;
    }
    std::uint64_t f = c.prime_power;
    for (unsigned i = 0; i < v; ++i) f /= c.prime;
    return f;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& orders = group_->generator_orders();
    if (exponents_.size() != orders.size())
        throw std::invalid_argument("DirichletCharacter: exponent count mismatch");
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (exponents_[i] >= orders[i])
            throw std::invalid_argument("DirichletCharacter: exponent out of range");
    conductor_ = 1;
    std::size_t off = 0;
    for (const auto& c : group_->components()) {
        conductor_ *= component_conductor(c, exponents_.data() + off);
        off += c.generators.size();
    }
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint64_t e) { return e == 0; });
}

CharacterValue DirichletCharacter::eval(std::int64_t n) const {
    std::uint64_t q = group_->q();
    std::int64_t rs = n % static_cast<std::int64_t>(q);
    if (rs < 0) rs += q;
    std::uint64_t r = static_cast<std::uint64_t>(rs);
    // accumulate sum of exps[j] * dlog_j / order_j over a common denominator
    std::uint64_t lcm = 1;
    for (auto o : group_->generator_orders()) lcm = lcm / gcd_u64(lcm, o) * o;
    unsigned __int128 num = 0;
    std::size_t off = 0;
    for (const auto& c : group_->components()) {
        std::uint64_t rc = r % c.prime_power;
        if (rc % c.prime == 0) return CharacterValue::zero_value();
        std::size_t ng = c.generators.size();
        for (std::size_t j = 0; j < ng; ++j) {
            std::uint32_t d = c.dlog_flat[rc * ng + j];
            num += static_cast<unsigned __int128>(exponents_[off + j]) * d % lcm * (lcm / c.orders[j]);
            num %= lcm;
        }
        off += ng;
    }
    return CharacterValue::root(static_cast<std::uint64_t>(num % lcm), lcm);
}

std::vector<DirichletCharacter> enumerate_characters(const FactoredInteger& q, bool primitive_only) {
    auto g = unit_group(q);
    const auto& orders = g->generator_orders();
    std::vector<DirichletCharacter> out;
    std::vector<std::uint64_t> exps(orders.size(), 0);
    for (;;) {
        DirichletCharacter chi(g, exps);
        if (!primitive_only || chi.is_primitive()) out.push_back(chi);
        // lexicographic successor: bump last coordinate
        std::size_t j = exps.size();
        while (j-- > 0) {
            if (++exps[j] < orders[j]) break;
            exps[j] = 0;
            if (j == 0) return out;
        }
        if (exps.empty()) return out;  // q = 1 or 2: single character
    }
}

std::complex<double> char_sum(const DirichletCharacter& chi, std::int64_t M, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("char_sum: N must be >= 1");
    std::complex<double> s{0.0, 0.0};
    for (std::uint64_t k = 1; k <= N; ++k) s += chi.eval(M + static_cast<std::int64_t>(k)).to_complex();
    return s;
}

std::complex<double> complete_poly_sum(const DirichletCharacter& chi,
                                       const std::vector<std::int64_t>& shifts, unsigned r) {
    if (shifts.size() != 2 * static_cast<std::size_t>(r))
        throw std::invalid_argument("complete_poly_sum: tuple length must be 2r");
    std::uint64_t q = chi.modulus();
    std::uint64_t phi = chi.group().phi_u64();
    std::complex<double> s{0.0, 0.0};
    for (std::uint64_t x = 1; x <= q; ++x) {
        std::uint64_t f1 = 1, f2 = 1;
        for (unsigned i = 0; i < r; ++i) {
            std::int64_t d = (static_cast<std::int64_t>(x) - shifts[i]) % static_cast<std::int64_t>(q);
            if (d < 0) d += q;
            f1 = mul_mod(f1, static_cast<std::uint64_t>(d), q);
        }
        for (unsigned i = r; i < 2 * r; ++i) {
            std::int64_t d = (static_cast<std::int64_t>(x) - shifts[i]) % static_cast<std::int64_t>(q);
            if (d < 0) d += q;
            f2 = mul_mod(f2, static_cast<std::uint64_t>(d), q);
        }
        std::uint64_t arg = mul_mod(f1, pow_mod(f2, phi - 1, q), q);
        s += chi.eval(static_cast<std::int64_t>(arg)).to_complex();
    }
    return s;
}

BigInt primitive_character_count(const FactoredInteger& q) {
    BigInt total = 0;
    for (std::uint64_t d : divisors_u64(q)) {
        FactoredInteger fd = factorize(d);
        FactoredInteger fq_over_d = factorize(q.value_u64() / d);
        total += BigInt(mobius(fq_over_d)) * euler_phi(fd);
    }
    return total;
}

}  // namespace exburgess
