#include "exburgess/weil.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>
#include <tuple>

namespace exburgess {

namespace {

std::uint64_t checked_budget(double B, unsigned r) {
    if (B < 2.0) throw std::invalid_argument("B must be >= 2");
    if (r < 2) throw std::invalid_argument("r must be >= 2");
    std::uint64_t Bf = static_cast<std::uint64_t>(std::floor(B));
    unsigned __int128 total = 1;
    for (unsigned i = 0; i < 2 * r; ++i) {
        total *= Bf;
        if (total > kTupleBudget) throw std::domain_error("tuple enumeration budget exceeded");
    }
    return Bf;
}

// odometer over {1..Bf}^(2r)
bool next_tuple(std::vector<std::int64_t>& b, std::uint64_t Bf) {
    std::size_t j = b.size();
    while (j-- > 0) {
        if (++b[j] <= static_cast<std::int64_t>(Bf)) return true;
        b[j] = 1;
    }
    return false;
}

unsigned count_distinct(const std::vector<std::int64_t>& b) {
    std::set<std::int64_t> s(b.begin(), b.end());
    return static_cast<unsigned>(s.size());
}

}  // namespace

TupleAnalysis analyze_tuple(const std::vector<std::int64_t>& shifts, unsigned r) {
    if (r < 2) throw std::invalid_argument("analyze_tuple: r must be >= 2");
    if (shifts.size() != 2 * static_cast<std::size_t>(r))
        throw std::invalid_argument("analyze_tuple: tuple length must be 2r");
    TupleAnalysis t;
    t.shifts = shifts;
    t.a_products.resize(shifts.size());
    for (std::size_t j = 0; j < shifts.size(); ++j) {
        BigInt prod = 1;
        for (std::size_t i = 0; i < shifts.size(); ++i) {
            if (i == j) continue;
            prod *= BigInt(shifts[i] - shifts[j]);
        }
        t.a_products[j] = prod;
    }
    t.distinct_count = count_distinct(shifts);
    t.is_good = t.distinct_count >= r + 1;
    return t;
}

BigInt s_q_exact(const FactoredInteger& q, unsigned r, double B) {
    std::uint64_t Bf = checked_budget(B, r);
    std::uint64_t qv = q.value_u64();
    std::vector<std::int64_t> b(2 * r, 1);
    BigInt total = 0;
    do {
        // min over coordinates unique in the tuple of gcd(prod of diffs, q);
        // differences are < Bf so the product fits in int64 under the budget.
        std::uint64_t best = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::int64_t prod = 1;
            bool zero = false;
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (i == j) continue;
                std::int64_t d = b[i] - b[j];
                if (d == 0) {
                    zero = true;
                    break;
                }
                prod *= d;
            }
            if (zero) continue;
            std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(prod < 0 ? -prod : prod), qv);
            if (best == 0 || g < best) best = g;
            if (best == 1) break;
        }
        total += best;  // 0 when no A_j is nonzero
    } while (next_tuple(b, Bf));
    return total;
}

BigRat bound_no_keep_gcd(const FactoredInteger& q, unsigned r, double B) {
    std::uint64_t Bf = checked_budget(B, r);
    BigRat half_tau = BigRat(tau_k(q, 2)) / 2;
    BigRat pw = 1;
    for (unsigned i = 0; i < 2 * r - 1; ++i) pw *= half_tau;
    BigRat bf_pow = 1;
    for (unsigned i = 0; i < 2 * r; ++i) bf_pow *= BigInt(Bf);
    return BigRat(2 * r) * pw * bf_pow;
}

BigInt bound_keep_gcd(const FactoredInteger& q, unsigned r, double B) {
    std::uint64_t Bf = checked_budget(B, r);
    BigInt bf_pow = 1;
    for (unsigned i = 0; i < 2 * r; ++i) bf_pow *= Bf;
    return BigInt(2 * r) * bf_pow * tau_k(q, 2 * r);
}

BigInt trivial_sq_bound(const FactoredInteger& q, unsigned r, double B) {
    std::uint64_t Bf = checked_budget(B, r);
    BigInt bf_pow = 1;
    for (unsigned i = 0; i < 2 * r; ++i) bf_pow *= Bf;
    return bf_pow * q.value();
}

double weil_lhs(const DirichletCharacter& chi, unsigned r, double B) {
    if (B < 2.0 || r < 2) throw std::invalid_argument("weil_lhs: need B >= 2 and r >= 2");
    std::uint64_t q = chi.modulus();
    std::uint64_t Bf = static_cast<std::uint64_t>(std::floor(B));
    // table of chi over one period, then sliding window sums of length Bf
    std::vector<std::complex<double>> tab(q);
    for (std::uint64_t n = 0; n < q; ++n) tab[n] = chi.eval(static_cast<std::int64_t>(n)).to_complex();
    std::complex<double> window{0.0, 0.0};
    for (std::uint64_t b = 1; b <= Bf; ++b) window += tab[(1 + b) % q];
    double total = 0.0;
    for (std::uint64_t x = 1; x <= q; ++x) {
        double m2 = std::norm(window);
        double term = 1.0;
        for (unsigned i = 0; i < r; ++i) term *= m2;
        total += term;
        // slide from x to x+1
        window -= tab[(x + 1) % q];
        window += tab[(x + 1 + Bf) % q];
    }
    return total;
}

double weil_rhs(const FactoredInteger& q, unsigned r, double B, bool use_floor) {
    if (B < 2.0 || r < 2) throw std::invalid_argument("weil_rhs: need B >= 2 and r >= 2");
    double qv = to_double(q.value());
    double Beff = use_floor ? std::floor(B) : B;
    double first = 2.0 * r * std::pow(4.0 * r, omega(q)) * std::pow(Beff, 2.0 * r) * m_r(q, r) * std::sqrt(qv);
    double rfact = 1.0;
    for (unsigned i = 2; i <= r; ++i) rfact *= i;
    double second = std::pow(static_cast<double>(r), 2.0 * r) / rfact * std::pow(B, static_cast<double>(r)) * qv;
    return first + second;
}

std::vector<VerificationReport> check_weil_sweep(const WeilSweepConfig& cfg) {
    struct Task {
        std::uint64_t q;
        unsigned chi_index;
        DirichletCharacter chi;
        FactoredInteger fq;
    };
    std::vector<Task> tasks;
    for (std::uint64_t qv = std::max<std::uint64_t>(cfg.q_min, 1); qv <= cfg.q_max; ++qv) {
        FactoredInteger fq = factorize(qv);
        auto prims = enumerate_characters(fq, true);
        for (unsigned i = 0; i < prims.size(); ++i) {
            // the modulus-1 character is primitive by the conductor convention
            // but principal; the moment bound degenerates for it (the inner sum
            // is floor(B) at every x), so sweeps cover nonprincipal chi only
            if (prims[i].is_principal()) continue;
            tasks.push_back({qv, i, prims[i], fq});
        }
    }
    struct Row {
        std::uint64_t q;
        unsigned chi_index;
        unsigned r;
        double B;
        double lhs, rhs;
    };
    std::vector<std::vector<Row>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(1u, cfg.workers);
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            for (unsigned r : cfg.r_set) {
                if (r >= 3 && !is_cubefree(t.fq)) continue;
                for (double B : cfg.B_set) {
                    double lhs = weil_lhs(t.chi, r, B);
                    double rhs = weil_rhs(t.fq, r, B);
                    results[i].push_back({t.q, t.chi_index, r, B, lhs, rhs});
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    std::vector<Row> flat;
    for (const auto& rows : results) flat.insert(flat.end(), rows.begin(), rows.end());
    std::sort(flat.begin(), flat.end(), [](const Row& a, const Row& b) {
        return std::tie(a.q, a.chi_index, a.r, a.B) < std::tie(b.q, b.chi_index, b.r, b.B);
    });

    std::vector<VerificationReport> reports;
    reports.reserve(flat.size());
    for (const Row& row : flat) {
        VerificationReport rep;
        rep.claim_id = "weil.thm_moment";
        rep.module = "weil";
        rep.params = {{"q", std::to_string(row.q)},
                      {"chi", std::to_string(row.chi_index)},
                      {"r", std::to_string(row.r)},
                      {"B", format_sig12(row.B)}};
        double lhs_cons = row.lhs * (1.0 + kFloatSlack);
        rep.margin_lo = row.rhs - lhs_cons;
        rep.margin_hi = row.rhs - row.lhs;
        rep.status = rep.margin_lo >= 0 ? Status::pass : Status::fail;
        rep.mode = "float64";
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::pair<std::uint64_t, std::uint64_t> classify_tuples(double B, unsigned r) {
    std::uint64_t Bf = checked_budget(B, r);
    std::vector<std::int64_t> b(2 * r, 1);
    std::uint64_t good = 0, bad = 0;
    do {
        if (count_distinct(b) >= r + 1)
            ++good;
        else
            ++bad;
    } while (next_tuple(b, Bf));
    return {good, bad};
}

VerificationReport check_lemma_2_2(const DirichletCharacter& chi,
                                   const std::vector<std::int64_t>& shifts, unsigned r) {
    TupleAnalysis t = analyze_tuple(shifts, r);
    if (!t.is_good)
        throw std::invalid_argument("check_lemma_2_2: tuple must have at least r+1 distinct entries");
    const FactoredInteger& fq = chi.group().modulus();
    if (r >= 3 && !is_cubefree(fq))
        throw std::invalid_argument("check_lemma_2_2: r >= 3 requires cubefree q");
    std::uint64_t qv = fq.value_u64();
    BigInt max_gcd = 0;
    for (const BigInt& a : t.a_products) {
        if (a == 0) continue;
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(a), BigInt(qv));
        max_gcd = std::max(max_gcd, g);
    }
    double lhs = std::abs(complete_poly_sum(chi, shifts, r));
    double rhs = std::pow(4.0 * r, omega(fq)) * std::sqrt(static_cast<double>(qv)) * to_double(max_gcd);

    VerificationReport rep;
    rep.claim_id = "weil.lemma_complete_sum";
    rep.module = "weil";
    std::string tup;
    for (std::size_t i = 0; i < shifts.size(); ++i) tup += (i ? "," : "") + std::to_string(shifts[i]);
    rep.params = {{"q", std::to_string(qv)}, {"tuple", tup}, {"r", std::to_string(r)}};
    double lhs_cons = lhs * (1.0 + kFloatSlack) + 1e-9;
    rep.margin_lo = rhs - lhs_cons;
    rep.margin_hi = rhs - lhs;
    rep.status = rep.margin_lo >= 0 ? Status::pass : Status::fail;
    rep.mode = "float64";
    return rep;
}

}  // namespace exburgess
