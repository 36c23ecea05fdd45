#include <doctest.h>

#include <cmath>

#include "exburgess/bounds.hpp"
#include "oracles.hpp"

using namespace exburgess;

TEST_CASE("a_of_r values") {
    // frozen from an independent high-precision evaluation of the formula
    CHECK(a_of_r(2) == doctest::Approx(10.38568577583725).epsilon(1e-12));
    CHECK(a_of_r(3) == doctest::Approx(15.42759929996336).epsilon(1e-12));
    CHECK(a_of_r(10) == doctest::Approx(47.58536207476245).epsilon(1e-12));
    for (unsigned r = 2; r < 40; ++r) CHECK(a_of_r(r) < a_of_r(r + 1));
    CHECK_THROWS_AS(a_of_r(1), std::invalid_argument);
}

TEST_CASE("threshold_q") {
    // 1145 ln 10 dominates the power-of-two floor at r = 2
    CHECK(threshold_q(2, Variant::theorem2).log_magnitude().to_double() ==
          doctest::Approx(2636.4599314782).epsilon(1e-12));
    // e^(a(2)) dominates for the double-exponential variant
    CHECK(threshold_q(2, Variant::theorem1).log_magnitude().to_double() ==
          doctest::Approx(32392.616040971).epsilon(1e-10));
    CHECK(threshold_q(2, Variant::theorem1) < threshold_q(3, Variant::theorem1));
    // theorem2 stays at the 10^1145 floor until 4r - 2 catches up
    CHECK(threshold_q(10, Variant::theorem2).log_magnitude().to_double() ==
          doctest::Approx(2636.4599314782).epsilon(1e-12));
}

TEST_CASE("kappa") {
    CHECK(kappa(4.0, 2) == doctest::Approx(0.018).epsilon(1e-14));
    CHECK(kappa(1e9, 2) == doctest::Approx(1.0 / 16).epsilon(1e-8));
    CHECK_THROWS_AS(kappa(1.0, 2), std::domain_error);
    for (unsigned r : {2u, 3u, 5u}) {
        double cap = std::pow(1.0 / (2 * r), static_cast<double>(r) / (r - 1));
        double prev = 0;
        for (double B = 1.5; B < 2000; B *= 1.7) {
            double k = kappa(B, r);
            CHECK(k > prev);  // increasing in B
            CHECK(k > 0);
            CHECK(k < cap);
            prev = k;
        }
        // for B >= 4 kappa is at least (36/125) of its limit
        for (double B : {4.0, 6.0, 25.0, 1e4})
            CHECK(kappa(B, r) >= 36.0 / 125.0 * cap * (1 - 1e-12));
    }
}

TEST_CASE("table constants") {
    CHECK(B_min_bf(2).to_double() == doctest::Approx(4.0).epsilon(1e-14));
    // frozen raw values, independently computed at high precision
    const double c_raw[9] = {15.2181828372, 5.35874281666, 3.67074730022, 2.95209807661,
                             2.54887555298, 2.28924877957, 2.10748906838, 1.97282596455,
                             1.86887698421};
    const double d_raw[9] = {8.36126875096, 4.58097324544, 3.39556534507, 2.81057366305,
                             2.46121886117, 2.22865570323, 2.06249056265, 1.93769273581,
                             1.84042065275};
    for (unsigned r = 2; r <= 10; ++r) {
        CHECK(C_of_r(r) == doctest::Approx(c_raw[r - 2]).epsilon(1e-9));
        CHECK(D_of_r(r) == doctest::Approx(d_raw[r - 2]).epsilon(1e-9));
    }
    // rows beyond 10 reuse the r = 10 constants
    CHECK(C_of_r(17) == C_of_r(10));
    CHECK(D_of_r(17) == D_of_r(10));
    // the emitted table, rounded up at the third decimal, matches the references
    for (const auto& row : table1_rows()) {
        CHECK(std::fabs(row.C_computed - row.C_paper) <= 0.001);
        CHECK(std::fabs(row.D_computed - row.D_paper) <= 0.001);
    }
    // D decreases along the table
    for (unsigned r = 2; r < 10; ++r) CHECK(D_of_r(r) > D_of_r(r + 1));
    CHECK(round_up_3(15.2181828) == doctest::Approx(15.219));
    CHECK(round_up_3(8.3612687) == doctest::Approx(8.362));
}

TEST_CASE("B_candidate") {
    auto ctx2 = BoundContext::exact(factorize(100000000), 2, Variant::theorem2);
    CHECK(ctx2.B_candidate().to_double() == doctest::Approx(141.42135623731).epsilon(1e-10));

    auto ctx1 = BoundContext::exact(factorize(100000007), 2, Variant::theorem1);
    // prime q: omega = 1, m_2 = 1, so B_1 = 0.5 q^(1/4)
    CHECK(ctx1.B_candidate().to_double() ==
          doctest::Approx(0.5 * std::pow(100000007.0, 0.25)).epsilon(1e-10));

    // B <= e r q^(1/(2r)) on a grid, both modes
    for (std::uint64_t q : {16ull, 1009ull, 360360ull})
        for (unsigned r : {2u, 3u, 4u})
            for (Variant v : {Variant::theorem1, Variant::theorem2}) {
                auto ctx = BoundContext::exact(factorize(q), r, v);
                CHECK(ctx.B_candidate() <= B_upper_bound(ctx));
            }
    for (double l10 : {1200.0, 3000.0})
        for (unsigned r : {2u, 5u})
            for (Variant v : {Variant::theorem1, Variant::theorem2}) {
                auto ctx = BoundContext::surrogate_log10(l10, r, v);
                CHECK(ctx.B_candidate() <= B_upper_bound(ctx));
            }

    // above the variant threshold, B clears the floor used for the table
    auto big1 = BoundContext::surrogate_log10(15000.0, 2, Variant::theorem1);
    CHECK(LogReal::from_bigfloat(B_min_bf(2)) <= big1.B_candidate());
    auto big2 = BoundContext::surrogate_log10(1200.0, 2, Variant::theorem2);
    CHECK(LogReal::from_bigfloat(B_min_bf(2)) <= big2.B_candidate());
}

TEST_CASE("T_factor examples") {
    auto t2 = BoundContext::exact(factorize(15), 2, Variant::theorem2).T_factor();
    CHECK(t2.to_double() == doctest::Approx(5.38956167945).epsilon(1e-10));
    auto t1 = BoundContext::exact(factorize(15), 2, Variant::theorem1).T_factor();
    CHECK(t1.to_double() == doctest::Approx(2.71660841257).epsilon(1e-10));
    // prime q: (8)^(1/4) (q/(q-1))^(1/2) -> 1.68179 as q grows
    auto tp = BoundContext::exact(factorize(1000003), 2, Variant::theorem2).T_factor();
    CHECK(tp.to_double() == doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-5));
    CHECK(tp.to_double() > 1.0);
}

TEST_CASE("evaluate_bound applicability") {
    auto small = BoundContext::exact(factorize(1000003), 3, Variant::theorem2);
    auto res = evaluate_bound_theta(small, 0.5);
    CHECK_FALSE(res.applicable);
    REQUIRE(!res.reasons.empty());
    CHECK(res.reasons[0].find("threshold") != std::string::npos);

    auto notcf = BoundContext::exact(factorize(24), 3, Variant::theorem1);
    auto res2 = evaluate_bound_theta(notcf, 0.5);
    CHECK_FALSE(res2.applicable);
    bool found = false;
    for (const auto& r : res2.reasons)
        if (r.find("cubefree") != std::string::npos) found = true;
    CHECK(found);

    auto ok = BoundContext::surrogate_log10(3000.0, 2, Variant::theorem2);
    auto res3 = evaluate_bound_theta(ok, 0.55);
    CHECK(res3.applicable);
    CHECK(res3.reasons.empty());
    CHECK(res3.bound.log10_magnitude().to_double() == doctest::Approx(1830.568).epsilon(1e-5));

    // regime notes
    auto low = evaluate_bound_theta(ok, 0.30);  // below 1/4 + 1/8
    bool trivial_note = false;
    for (const auto& n : low.notes)
        if (n.find("trivial") != std::string::npos) trivial_note = true;
    CHECK(trivial_note);
    auto high = evaluate_bound_theta(ok, 0.70);
    bool pv_note = false;
    for (const auto& n : high.notes)
        if (n.find("Polya-Vinogradov") != std::string::npos) pv_note = true;
    CHECK(pv_note);
}

TEST_CASE("evaluate_bound dual path spot checks") {
    for (double l10 : {2800.0, 3456.7, 4999.0}) {
        for (unsigned r : {2u, 5u, 10u}) {
            for (double theta : {0.31, 0.5, 0.64}) {
                auto ctx = BoundContext::surrogate_log10(l10, r, Variant::theorem2);
                auto res = evaluate_bound_theta(ctx, theta);
                double direct =
                    testing::direct_log_bound_surrogate(l10, r, theta, Variant::theorem2);
                double mine = res.bound.log_magnitude().to_double();
                CHECK(std::fabs(mine - direct) / std::fabs(direct) < 1e-9);
            }
        }
    }
}

TEST_CASE("intermediates") {
    auto ctx = BoundContext::surrogate_log10(3000.0, 2, Variant::theorem2);
    LogReal N = LogReal::from_log(BigFloat(0.55) * ctx.log_q());
    LogReal B = ctx.B_candidate();
    LogReal A = LogReal::from_bigfloat(ctx.kappa_value()) * N / B;
    auto mid = intermediates(ctx, N, A, B);

    // all six quantities positive and finite in log space
    for (const LogReal* v : {&mid.u, &mid.w, &mid.s, &mid.alpha, &mid.P, &mid.Q}) {
        CHECK(v->sign() > 0);
        CHECK(std::isfinite(v->log_magnitude().to_double()));
    }

    // w (r^2 beta^(r+1) r! log q) = f_i exactly, by construction of w
    LogReal recon = mid.w * LogReal::from_double(4.0) * ctx.beta().pow(3.0) *
                    LogReal::from_double(2.0) * LogReal::from_log(log_bf(ctx.log_q()));
    CHECK(recon.log_magnitude().to_double() ==
          doctest::Approx(ctx.f_factor().log_magnitude().to_double()).epsilon(1e-20));

    // s converges to 2 C kappa^(1/2) / 1.5 as B grows without bound
    double s_expected = 2.0 * ctx.C() * 0.25 / 1.5;
    CHECK(mid.s.to_double() == doctest::Approx(s_expected).epsilon(1e-6));

    // alpha <= (4/3) kappa log q holds here (q is far above every threshold)
    CHECK(mid.alpha_postcondition_checked);
    CHECK(mid.alpha_postcondition_holds);

    // inconsistent A B vs kappa N is rejected
    CHECK_THROWS_AS(intermediates(ctx, N, A * LogReal::from_double(1.01), B),
                    std::invalid_argument);

    // P = alpha N^2 / B as an identity
    LogReal p_recon = mid.alpha * N * N / B;
    CHECK(p_recon.log_magnitude().to_double() ==
          doctest::Approx(mid.P.log_magnitude().to_double()).epsilon(1e-20));
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(BoundContext::exact(factorize(100), 1, Variant::theorem2),
                    std::invalid_argument);
    CHECK_THROWS_AS(BoundContext::surrogate(BigFloat(0.5), 2, Variant::theorem2),
                    std::invalid_argument);
    auto ctx = BoundContext::exact(factorize(100), 2, Variant::theorem2);
    CHECK_THROWS_AS(evaluate_bound(ctx, LogReal::zero()), std::invalid_argument);
    double kv = ctx.kappa_value().to_double();
    CHECK(kv > 0);
    CHECK(kv < 1);
}
