#include <doctest.h>

#include <map>
#include <random>

#include "exburgess/characters.hpp"

using namespace exburgess;

namespace {

// Legendre symbol table mod 5, the reference for the quadratic character.
int legendre5(std::int64_t n) {
    static const int tab[5] = {0, 1, -1, -1, 1};
    std::int64_t r = n % 5;
    if (r < 0) r += 5;
    return tab[r];
}

DirichletCharacter quadratic_mod5() {
    // exponent 2 on a generator of order 4
    for (const auto& chi : enumerate_characters(factorize(5), false)) {
        bool match = true;
        for (std::int64_t n = 1; n <= 5; ++n) {
            auto v = chi.eval(n);
            int leg = legendre5(n);
            if (leg == 0 && !v.zero) match = false;
            if (leg == 1 && !(v == CharacterValue::root(0, 1))) match = false;
            if (leg == -1 && !(v == CharacterValue::root(1, 2))) match = false;
        }
        if (match) return chi;
    }
    throw std::logic_error("quadratic character mod 5 not found");
}

}  // namespace

TEST_CASE("unit group structure") {
    auto g5 = unit_group(factorize(5));
    REQUIRE(g5->components().size() == 1);
    CHECK(g5->components()[0].generators.size() == 1);
    CHECK(g5->components()[0].orders[0] == 4);
    CHECK(g5->components()[0].generators[0] == 2);  // 2 is the least primitive root mod 5

    auto g8 = unit_group(factorize(8));
    REQUIRE(g8->components().size() == 1);
    REQUIRE(g8->components()[0].generators.size() == 2);
    CHECK(g8->components()[0].generators[0] == 7);  // -1 mod 8
    CHECK(g8->components()[0].generators[1] == 5);
    CHECK(g8->components()[0].orders == std::vector<std::uint64_t>{2, 2});

    auto g12 = unit_group(factorize(12));
    REQUIRE(g12->components().size() == 2);
    CHECK(g12->components()[0].prime_power == 4);
    CHECK(g12->components()[1].prime_power == 3);
    CHECK(g12->phi() == 4);
}

TEST_CASE("generator orders are exactly as stated") {
    for (std::uint64_t q = 1; q <= 200; ++q) {
        auto g = unit_group(factorize(q));
        BigInt order_product = 1;
        for (const auto& c : g->components()) {
            for (std::size_t j = 0; j < c.generators.size(); ++j) {
                std::uint64_t phi_pe = c.prime_power / c.prime * (c.prime - 1);
                CHECK(multiplicative_order(c.generators[j], c.prime_power, phi_pe) == c.orders[j]);
                order_product *= c.orders[j];
            }
            if (c.generators.empty()) CHECK(c.prime_power == 2);
        }
        CHECK(order_product == g->phi());
    }
}

TEST_CASE("enumerate_characters counts") {
    CHECK(enumerate_characters(factorize(5), false).size() == 4);
    CHECK(enumerate_characters(factorize(12), true).size() == 1);
    CHECK(enumerate_characters(factorize(1), false).size() == 1);
    CHECK(enumerate_characters(factorize(2), false).size() == 1);
    CHECK(enumerate_characters(factorize(2), true).empty());
    for (std::uint64_t q = 1; q <= 100; ++q)
        CHECK(BigInt(enumerate_characters(factorize(q), false).size()) == euler_phi(factorize(q)));
}

TEST_CASE("primitive count matches the divisor-sum formula") {
    for (std::uint64_t q = 1; q <= 500; ++q) {
        auto got = enumerate_characters(factorize(q), true).size();
        BigInt expected = primitive_character_count(factorize(q));
        // the formula can be negative only in principle; it never is
        CHECK(BigInt(got) == expected);
    }
}

TEST_CASE("conductor examples") {
    // principal character mod 12
    auto all12 = enumerate_characters(factorize(12), false);
    CHECK(all12[0].is_principal());
    CHECK(all12[0].conductor() == 1);

    CHECK(quadratic_mod5().conductor() == 5);
    CHECK(quadratic_mod5().is_primitive());

    // mod-12 character induced from the nonprincipal character mod 3:
    // exponent 0 on the mod-4 generator, exponent 1 on the mod-3 generator
    auto g12 = unit_group(factorize(12));
    DirichletCharacter induced(g12, {0, 1});
    CHECK(induced.conductor() == 3);
    CHECK_FALSE(induced.is_primitive());
}

TEST_CASE("eval examples") {
    auto chi = quadratic_mod5();
    CHECK(chi.eval(2) == CharacterValue::root(1, 2));  // value -1
    CHECK(chi.eval(1).is_one());
    CHECK(chi.eval(5).zero);
    for (const auto& c : enumerate_characters(factorize(12), false)) {
        CHECK(c.eval(6).zero);
        CHECK(c.eval(1).is_one());
    }
}

TEST_CASE("eval matches the Legendre table mod 5") {
    auto chi = quadratic_mod5();
    for (std::int64_t n = -10; n <= 10; ++n) {
        auto v = chi.eval(n);
        int leg = legendre5(n);
        if (leg == 0) CHECK(v.zero);
        if (leg == 1) CHECK(v == CharacterValue::root(0, 1));
        if (leg == -1) CHECK(v == CharacterValue::root(1, 2));
    }
}

TEST_CASE("multiplicativity and periodicity") {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 1000) {
        std::uint64_t q = 2 + rng() % 199;
        auto chars = enumerate_characters(factorize(q), false);
        const auto& chi = chars[rng() % chars.size()];
        std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 1000);
        std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 1000);
        if (std::gcd(static_cast<std::uint64_t>(m % q == 0 ? q : ((m % q + q) % q)), q) != 1) continue;
        if (std::gcd(static_cast<std::uint64_t>(n % q == 0 ? q : ((n % q + q) % q)), q) != 1) continue;
        CHECK(chi.eval(m * n) == chi.eval(m) * chi.eval(n));
        CHECK(chi.eval(n) == chi.eval(n + static_cast<std::int64_t>(q)));
        ++done;
    }
}

TEST_CASE("orthogonality over a full period, exactly") {
    // For nonprincipal chi the values over a period hit each root of unity of
    // order ord(chi) equally often (phi(q)/ord times) and vanish q - phi(q)
    // times, which forces the exact sum to 0.
    for (std::uint64_t q = 3; q <= 60; ++q) {
        for (const auto& chi : enumerate_characters(factorize(q), false)) {
            if (chi.is_principal()) continue;
            std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> counts;
            std::uint64_t zeros = 0;
            std::uint64_t ord = 1;
            for (std::uint64_t n = 1; n <= q; ++n) {
                auto v = chi.eval(static_cast<std::int64_t>(n));
                if (v.zero) {
                    ++zeros;
                    continue;
                }
                counts[{v.num, v.den}]++;
                ord = std::lcm(ord, v.den);
            }
            std::uint64_t phi = unit_group(factorize(q))->phi_u64();
            CHECK(zeros == q - phi);
            CHECK(ord >= 2);  // nonprincipal
            REQUIRE(counts.size() == ord);
            for (const auto& [root, count] : counts) CHECK(count == phi / ord);

            // double-precision accumulation agrees
            auto s = char_sum(chi, 0, q);
            CHECK(std::abs(s) < 1e-9);
        }
    }
}

TEST_CASE("char_sum examples") {
    auto chi = quadratic_mod5();
    CHECK(std::abs(char_sum(chi, 0, 5)) < 1e-12);
    CHECK(std::abs(char_sum(chi, 0, 2)) < 1e-12);
    CHECK(char_sum(chi, 0, 1).real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(char_sum(chi, 0, 0), std::invalid_argument);
    for (std::uint64_t N : {3ull, 7ull, 23ull})
        CHECK(std::abs(char_sum(chi, -4, N)) <= static_cast<double>(N) + 1e-9);
}

TEST_CASE("complete_poly_sum examples") {
    auto chars5 = enumerate_characters(factorize(5), false);
    auto chi = quadratic_mod5();

    // all shifts equal: the summand is the indicator of gcd(x-1, q) = 1
    for (const auto& c : chars5) {
        auto s = complete_poly_sum(c, {1, 1, 1, 1}, 2);
        CHECK(s.real() == doctest::Approx(4.0));
        CHECK(s.imag() == doctest::Approx(0.0));
    }

    // quadratic character, shifts (1,1,2,2): indicator of gcd((x-1)(x-2), 5) = 1
    auto s2 = complete_poly_sum(chi, {1, 1, 2, 2}, 2);
    CHECK(s2.real() == doctest::Approx(3.0));
    CHECK(s2.imag() == doctest::Approx(0.0));

    CHECK_THROWS_AS(complete_poly_sum(chi, {1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("complete_poly_sum equals the conjugate-product form") {
    // chi(f1 f2^(phi-1)) = chi(f1) conj(chi(f2)) on the coprime set
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        std::uint64_t q = 3 + rng() % 48;
        auto chars = enumerate_characters(factorize(q), false);
        const auto& chi = chars[rng() % chars.size()];
        std::vector<std::int64_t> b(4);
        for (auto& t : b) t = 1 + static_cast<std::int64_t>(rng() % 10);
        std::complex<double> direct = complete_poly_sum(chi, b, 2);
        std::complex<double> viaconj{0, 0};
        for (std::uint64_t x = 1; x <= q; ++x) {
            std::int64_t f1 = (x - b[0]) * (x - b[1]) % static_cast<std::int64_t>(q);
            std::int64_t f2 = (x - b[2]) * (x - b[3]) % static_cast<std::int64_t>(q);
            auto v1 = chi.eval(f1);
            auto v2 = chi.eval(f2);
            if (v1.zero || v2.zero) continue;
            viaconj += (v1 * v2.conj()).to_complex();
        }
        CHECK(std::abs(direct - viaconj) < 1e-9);
    }
}
