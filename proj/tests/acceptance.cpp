// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Each criterion pins its tolerance and runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "exburgess/bounds.hpp"
#include "exburgess/certify.hpp"
#include "exburgess/runner.hpp"
#include "exburgess/weil.hpp"
#include "oracles.hpp"

using namespace exburgess;

namespace {

int failures = 0;

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void report(int idx, bool pass, const std::string& what, double secs, double limit_secs) {
    bool in_time = secs <= limit_secs;
    bool ok = pass && in_time;
    std::printf("[%s] criterion %d: %s (%.2fs / limit %.0fs)\n", ok ? "PASS" : "FAIL", idx,
                what.c_str(), secs, limit_secs);
    if (!ok) ++failures;
}

void criterion1_table() {
    Stopwatch sw;
    bool ok = true;
    double worst = 0;
    for (const auto& row : table1_rows()) {
        double d = std::max(std::fabs(row.C_computed - row.C_paper),
                            std::fabs(row.D_computed - row.D_paper));
        worst = std::max(worst, d);
        if (d > 0.001) ok = false;
    }
    report(1, ok, "table reproduction, 9 rows within 0.001 (worst |diff| = " + format_sig12(worst) + ")",
           sw.seconds(), 1.0);
}

void criterion2_delta() {
    Stopwatch sw;
    IntervalReal d = compute_delta();
    bool ok = d.width() < BigFloat(1e-8) && d.lo() < BigFloat("0.954422") &&
              d.hi() > BigFloat("0.954422") && d.lo() > BigFloat("0.954417") &&
              d.hi() < BigFloat("0.954427");
    report(2, ok,
           "delta enclosure width " + format_sig12(d.width().to_double()) + " < 1e-8 around 0.954422",
           sw.seconds(), 5.0);
}

void criterion3_weil() {
    WeilSweepConfig cfg;
    cfg.q_max = 300;
    cfg.r_set = {2, 3};
    cfg.B_set = {2.0, 2.5, 3.0, 5.0, 10.0};

    Stopwatch sw1;
    cfg.workers = 1;
    auto rows1 = check_weil_sweep(cfg);
    double t1 = sw1.seconds();

    Stopwatch sw8;
    cfg.workers = 8;
    auto rows8 = check_weil_sweep(cfg);
    double t8 = sw8.seconds();

    std::size_t violations = 0;
    for (const auto& r : rows1)
        if (r.status != Status::pass) ++violations;
    bool same = rows1.size() == rows8.size();
    for (std::size_t i = 0; same && i < rows1.size(); ++i)
        if (rows1[i].params != rows8[i].params || rows1[i].status != rows8[i].status) same = false;

    bool ok = violations == 0 && same && t1 < 300.0 && t8 < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "moment sweep q<=300, %zu checks, %zu violations (1 worker %.1fs, 8 workers %.1fs)",
                  rows1.size(), violations, t1, t8);
    report(3, ok, buf, t1 + t8, 360.0);
}

void criterion4_sq() {
    Stopwatch sw;
    std::size_t checks = 0, violations = 0;
    for (std::uint64_t qv = 5; qv <= 200; ++qv) {
        auto fq = factorize(qv);
        for (unsigned r : {2u, 3u}) {
            if (r == 3 && (qv > 100 || !is_cubefree(fq))) continue;
            for (unsigned B = 2; B <= 6; ++B) {
                if (B * B >= qv) continue;
                BigInt s = s_q_exact(fq, r, B);
                bool ok = BigRat(s) <= bound_no_keep_gcd(fq, r, B) && s <= bound_keep_gcd(fq, r, B) &&
                          s <= trivial_sq_bound(fq, r, B);
                ++checks;
                if (!ok) ++violations;
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "gcd-sum bounds, %zu exact checks, %zu violations", checks,
                  violations);
    report(4, violations == 0 && checks > 0, buf, sw.seconds(), 120.0);
}

void criterion5_lemma22() {
    Stopwatch sw;
    RunConfig cfg;
    cfg.seed = 20240801;
    cfg.lemma22_trials = 500;
    cfg.lemma22_q_max = 150;
    // the runner helper is not exposed; redo the sampler here with the same contract
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::uint64_t> pool;
    for (std::uint64_t qv = 3; qv <= cfg.lemma22_q_max; ++qv) {
        auto fq = factorize(qv);
        if (!is_cubefree(fq)) continue;
        if (primitive_character_count(fq) > 0) pool.push_back(qv);
    }
    unsigned done = 0;
    std::size_t violations = 0;
    double worst = 1e300;
    while (done < cfg.lemma22_trials) {
        std::uint64_t qv = pool[rng() % pool.size()];
        auto prims = enumerate_characters(factorize(qv), true);
        const auto& chi = prims[rng() % prims.size()];
        std::vector<std::int64_t> tuple(4);
        for (auto& t : tuple) t = 1 + static_cast<std::int64_t>(rng() % 8);
        if (!analyze_tuple(tuple, 2).is_good) continue;
        auto rep = check_lemma_2_2(chi, tuple, 2);
        if (rep.status != Status::pass) ++violations;
        worst = std::min(worst, rep.margin_lo);
        ++done;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "complete-sum bound, 500 seeded instances, %zu violations (min margin %.3f)",
                  violations, worst);
    report(5, violations == 0, buf, sw.seconds(), 60.0);
}

void criterion6_envelopes() {
    Stopwatch sw;
    auto mob = verify_mobius_lemma(10000);
    auto phi = verify_phi_sum_lemma(10000);
    auto va = verify_vA_lemmas(200, 20240801);
    bool ok = mob.status == Status::pass && phi.status == Status::pass && va.status == Status::pass;
    report(6, ok,
           "partial-sum envelopes to N=10^4 and 200 counting-lemma instances, zero violations",
           sw.seconds(), 60.0);
}

void criterion7_claims() {
    Stopwatch sw;
    auto reports = verify_section5_claims();
    bool ok = reports.size() == 10;
    double l54d = 0, l55 = 0;
    for (const auto& r : reports) {
        if (r.status != Status::pass || !(r.margin_lo > 0)) ok = false;
        if (r.claim_id == "L54d") l54d = r.margin_lo;
        if (r.claim_id == "L55") l55 = r.margin_lo;
    }
    // the thin boundary margins pin the certification quality
    if (!(l54d > 0.07 && l54d < 0.08)) ok = false;
    if (!(l55 > 0.0044 && l55 < 0.0045)) ok = false;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "ten claims certified (L54d margin %.4f at the 10^1008 boundary, L55 margin %.5f)",
                  l54d, l55);
    report(7, ok, buf, sw.seconds(), 120.0);
}

void criterion8_dual_path() {
    Stopwatch sw;
    bool ok = true;
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        double l10 = 2700.0 + k * (2300.0 / 99.0);
        unsigned r = 2 + k % 9;
        double theta = 0.3 + 0.35 * ((k * 37) % 100) / 99.0;
        auto ctx = BoundContext::surrogate_log10(l10, r, Variant::theorem2);
        auto res = evaluate_bound_theta(ctx, theta);
        double mine = res.bound.log_magnitude().to_double();
        double direct = testing::direct_log_bound_surrogate(l10, r, theta, Variant::theorem2);
        double rel = std::fabs(mine - direct) / std::fabs(direct);
        worst = std::max(worst, rel);
        if (rel >= 1e-9) ok = false;
    }
    report(8, ok, "dual-path bound agreement on 100 points, worst relative log-difference " +
                      format_sig12(worst),
           sw.seconds(), 60.0);
}

void criterion9_statement() {
    Stopwatch sw;
    // The theorems only apply from 10^1145 on, where S_chi cannot be computed;
    // criteria 1-8 substitute for a direct test.  The artifact must (a) gate
    // applicability at that threshold and (b) expose the exploratory ratio
    // mode without pass/fail semantics.
    bool ok = true;
    BigFloat floor1145 = BigFloat(1145.0) * log_bf(BigFloat(10.0));
    for (unsigned r = 2; r <= 64; ++r)
        for (Variant v : {Variant::theorem1, Variant::theorem2})
            if (threshold_q(r, v).log_magnitude() < floor1145) ok = false;

    auto small = BoundContext::exact(factorize(1000003), 2, Variant::theorem2);
    if (evaluate_bound_theta(small, 0.5).applicable) ok = false;

    RunConfig cfg;
    cfg.q = 101;
    cfg.r = 2;
    cfg.N = 50;
    auto explore = run_explore(cfg);
    if (explore.exit_code != 0 || explore.rows.empty()) ok = false;
    for (const auto& row : explore.rows)
        if (row.mode != "exploratory") ok = false;

    report(9, ok,
           "direct theorem test impossible below 10^1145: applicability gated, exploratory "
           "mode informational only",
           sw.seconds(), 10.0);
}

void criterion10_determinism() {
    Stopwatch sw;
    RunConfig cfg;
    cfg.seed = 424242;
    cfg.q_max = 40;
    cfg.envelope_N_max = 2000;
    cfg.va_trials = 50;
    cfg.lemma22_trials = 50;
    cfg.workers = 8;
    auto a = run_full(cfg);
    auto b = run_full(cfg);
    std::string ja = to_json(a.header, a.rows);
    std::string jb = to_json(b.header, b.rows);
    bool ok = ja == jb && !ja.empty() && a.exit_code == 0;
    report(10, ok, "full suite twice with one seed: byte-identical JSON (" +
                       std::to_string(ja.size()) + " bytes)",
           sw.seconds(), 300.0);
}

}  // namespace

int main() {
    std::puts("acceptance suite");
    criterion1_table();
    criterion2_delta();
    criterion3_weil();
    criterion4_sq();
    criterion5_lemma22();
    criterion6_envelopes();
    criterion7_claims();
    criterion8_dual_path();
    criterion9_statement();
    criterion10_determinism();
    if (failures) {
        std::printf("%d criteria FAILED\n", failures);
        return 1;
    }
    std::puts("all 10 criteria passed");
    return 0;
}
