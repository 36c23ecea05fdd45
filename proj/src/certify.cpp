#include "exburgess/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace exburgess {

namespace {

IntervalReal iv_ln2() { return log_iv(IntervalReal::point(2L)); }
IntervalReal iv_ln10() { return log_iv(IntervalReal::point(10L)); }

IntervalReal six_over_pi2_iv() {
    IntervalReal pi = IntervalReal::pi();
    return IntervalReal::point(6L) / (pi * pi);
}

// a(r) = 2 ln2 (3.0758 r + 1.38402 ln(4r) - 1.5379)
IntervalReal a_iv(const IntervalReal& r) {
    IntervalReal inner = IntervalReal::from_decimal("3.0758") * r +
                         IntervalReal::from_decimal("1.38402") * log_iv(IntervalReal::point(4L) * r) -
                         IntervalReal::from_decimal("1.5379");
    return IntervalReal::point(2L) * iv_ln2() * inner;
}

// Adaptive bisection proof that eval > 0 on [lo, hi].  On success stores the
// certified lower bound for the minimum (min over accepted boxes).  With
// sharpen set, boxes are also split until the enclosure width drops below the
// certified value, so the stored bound is within a factor ~2 of the true
// minimum instead of merely positive.
bool prove_positive_on(const std::function<IntervalReal(const IntervalReal&)>& eval, BigFloat lo,
                       BigFloat hi, int max_depth, BigFloat* min_lower, bool sharpen = false) {
    struct Box {
        BigFloat a, b;
        int depth;
    };
    std::vector<Box> stack{{std::move(lo), std::move(hi), 0}};
    bool have_min = false;
    BigFloat best;
    while (!stack.empty()) {
        Box box = std::move(stack.back());
        stack.pop_back();
        IntervalReal val = eval(IntervalReal(box.a, box.b));
        bool accept = val.lo().sign() > 0;
        if (accept && sharpen && box.depth < max_depth && val.width() > val.lo()) accept = false;
        if (accept) {
            if (!have_min || val.lo() < best) {
                best = val.lo();
                have_min = true;
            }
            continue;
        }
        if (val.hi().sign() <= 0) return false;  // definite violation
        if (box.depth >= max_depth) {
            if (val.lo().sign() > 0) {  // positive but not sharp: still sound
                if (!have_min || val.lo() < best) {
                    best = val.lo();
                    have_min = true;
                }
                continue;
            }
            return false;  // cannot certify at this resolution
        }
        BigFloat mid = (box.a + box.b) * BigFloat(0.5);
        stack.push_back({box.a, mid, box.depth + 1});
        stack.push_back({mid, box.b, box.depth + 1});
    }
    if (min_lower && have_min) *min_lower = best;
    return true;
}

VerificationReport make_claim_report(const std::string& id, const IntervalReal& margin, bool pass,
                                     std::string method, std::string notes) {
    VerificationReport rep;
    rep.claim_id = id;
    rep.module = "certify";
    rep.params = {{"method", method}};
    rep.status = pass ? Status::pass : Status::inconclusive;
    rep.margin_lo = margin.lo().to_double();
    rep.margin_hi = margin.hi().to_double();
    rep.mode = "interval";
    rep.notes = std::move(notes);
    return rep;
}

}  // namespace

IntervalReal zeta_prime_2_enclosure() {
    static const IntervalReal cached = [] {
        const long N = 100000;
        IntervalReal sum = IntervalReal::point(0L);
        for (long n = 2; n <= N; ++n) {
            IntervalReal nn = IntervalReal::point(n);
            sum += log_iv(nn) / (nn * nn);
        }
        // ln t / t^2 decreases for t >= 2, so the tail sum lies between the
        // integrals from N+1 and from N: integral_X^inf ln t/t^2 = (ln X + 1)/X.
        IntervalReal tail_lo =
            (log_iv(IntervalReal::point(N + 1)) + IntervalReal::point(1L)) / IntervalReal::point(N + 1);
        IntervalReal tail_hi =
            (log_iv(IntervalReal::point(N)) + IntervalReal::point(1L)) / IntervalReal::point(N);
        IntervalReal total = sum + IntervalReal(tail_lo.lo(), tail_hi.hi());
        return -total;
    }();
    return cached;
}

IntervalReal compute_delta() {
    static const IntervalReal cached = [] {
        IntervalReal pi = IntervalReal::pi();
        IntervalReal pi2 = pi * pi;
        IntervalReal pi4 = pi2 * pi2;
        return IntervalReal::point(6L) / pi2 -
               IntervalReal::point(36L) * zeta_prime_2_enclosure() / pi4;
    }();
    return cached;
}

BigFloat delta_midpoint() {
    static const BigFloat cached = compute_delta().mid();
    return cached;
}

VerificationReport verify_mobius_lemma(std::uint32_t N_max) {
    if (N_max < 2) throw std::invalid_argument("verify_mobius_lemma: N_max must be >= 2");
    SieveTables tables(N_max);
    IntervalReal c1 = six_over_pi2_iv();
    IntervalReal pi = IntervalReal::pi();
    IntervalReal pi4 = (pi * pi) * (pi * pi);
    IntervalReal c2 = IntervalReal::point(36L) * zeta_prime_2_enclosure() / pi4;

    IntervalReal s1 = IntervalReal::point(1L);  // d = 1 term
    IntervalReal s2 = IntervalReal::point(0L);
    bool all_pass = true;
    IntervalReal worst = IntervalReal::point(1L);
    std::uint32_t worst_N = 0;
    bool have_worst = false;
    for (std::uint32_t N = 2; N <= N_max; ++N) {
        int mu = tables.mu[N];
        if (mu != 0) {
            IntervalReal nn = IntervalReal::point(static_cast<long>(N));
            IntervalReal d2 = nn * nn;
            s1 += IntervalReal::point(static_cast<long>(mu)) / d2;
            s2 += IntervalReal::point(static_cast<long>(mu)) * log_iv(nn) / d2;
        }
        IntervalReal env1 = IntervalReal::point(1L) / IntervalReal::point(static_cast<long>(N - 1));
        IntervalReal env2 = (log_iv(IntervalReal::point(static_cast<long>(N - 1))) + IntervalReal::point(1L)) /
                            IntervalReal::point(static_cast<long>(N - 1));
        IntervalReal m1 = env1 - abs_iv(s1 - c1);
        IntervalReal m2 = env2 - abs_iv(s2 - c2);
        IntervalReal m = (m1.lo() < m2.lo()) ? m1 : m2;
        if (!(m.lo().sign() > 0)) all_pass = false;
        if (!have_worst || m.lo() < worst.lo()) {
            worst = m;
            worst_N = N;
            have_worst = true;
        }
    }
    VerificationReport rep;
    rep.claim_id = "sec4.mobius_sums";
    rep.module = "certify";
    rep.params = {{"N_max", std::to_string(N_max)}};
    rep.status = all_pass ? Status::pass : Status::inconclusive;
    rep.margin_lo = worst.lo().to_double();
    rep.margin_hi = worst.hi().to_double();
    rep.mode = "interval";
    rep.notes = "worst envelope margin at N=" + std::to_string(worst_N);
    return rep;
}

VerificationReport verify_phi_sum_lemma(std::uint32_t N_max) {
    if (N_max < 2) throw std::invalid_argument("verify_phi_sum_lemma: N_max must be >= 2");
    SieveTables tables(N_max);
    IntervalReal c1 = six_over_pi2_iv();
    IntervalReal delta = compute_delta();
    IntervalReal lhs = IntervalReal::point(1L);  // n = 1 term
    bool all_pass = true;
    IntervalReal worst = IntervalReal::point(1L);
    std::uint32_t worst_N = 0;
    bool have_worst = false;
    for (std::uint32_t N = 2; N <= N_max; ++N) {
        IntervalReal nn = IntervalReal::point(static_cast<long>(N));
        lhs += IntervalReal::point(static_cast<long>(tables.phi[N])) / (nn * nn);
        IntervalReal logN = log_iv(nn);
        IntervalReal rhs = c1 * logN + delta +
                           (IntervalReal::point(2L) * logN + IntervalReal::point(2L)) /
                               IntervalReal::point(static_cast<long>(N - 1));
        IntervalReal m = rhs - lhs;
        if (!(m.lo().sign() > 0)) all_pass = false;
        if (!have_worst || m.lo() < worst.lo()) {
            worst = m;
            worst_N = N;
            have_worst = true;
        }
    }
    VerificationReport rep;
    rep.claim_id = "sec4.phi_sum";
    rep.module = "certify";
    rep.params = {{"N_max", std::to_string(N_max)}};
    rep.status = all_pass ? Status::pass : Status::inconclusive;
    rep.margin_lo = worst.lo().to_double();
    rep.margin_hi = worst.hi().to_double();
    rep.mode = "interval";
    rep.notes = "worst margin at N=" + std::to_string(worst_N);
    return rep;
}

namespace {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

VerificationReport verify_vA_lemmas(unsigned trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    bool all_pass = true;
    bool have_worst = false;
    IntervalReal worst45 = IntervalReal::point(0L);
    double worst42 = 0.0;
    bool have42 = false;
    std::string first_violation;
    IntervalReal c1 = six_over_pi2_iv();
    IntervalReal delta = compute_delta();

    for (unsigned t = 0; t < trials; ++t) {
        // The pairwise-gcd count (and the smooth envelope derived from it)
        // bounds the congruence count only when every solution of
        // a2 n1 = a1 n2 (mod q) is an integer-ratio solution, i.e. when
        // 2A(M' + N) < q for the reduced window start M' = M mod q.  The
        // sampler stays inside that regime; v_A itself only depends on
        // M mod q, so adding random multiples of q keeps M arbitrary.
        std::uint64_t q = 200 + rand_below(rng, 9801);  // 200..10^4
        double A = 2.0 + rand_unit(rng) * (static_cast<double>(q) / 16.0 > 50.0
                                               ? 48.0
                                               : static_cast<double>(q) / 16.0 - 2.0);
        std::uint64_t budget = static_cast<std::uint64_t>(static_cast<double>(q) / (2.0 * A)) - 1;
        std::uint64_t N = 1 + rand_below(rng, std::min<std::uint64_t>(1000, budget));
        std::uint64_t m_room = budget > N ? budget - N : 1;
        std::int64_t M = static_cast<std::int64_t>(rand_below(rng, m_room)) +
                         static_cast<std::int64_t>(q) * (static_cast<std::int64_t>(rand_below(rng, 201)) - 100);

        std::vector<std::uint64_t> members;
        for (std::uint64_t a = 1; a <= static_cast<std::uint64_t>(A); ++a)
            if (gcd_u64(a, q) == 1) members.push_back(a);

        std::vector<std::uint32_t> v(q, 0);
        for (std::uint64_t a : members) {
            std::uint64_t inv = inv_mod(a, q);
            for (std::uint64_t k = 1; k <= N; ++k) {
                std::int64_t n = M + static_cast<std::int64_t>(k);
                std::int64_t nm = n % static_cast<std::int64_t>(q);
                if (nm < 0) nm += q;
                ++v[mul_mod(inv, static_cast<std::uint64_t>(nm), q)];
            }
        }
        std::uint64_t sum_v = 0, sum_v2 = 0;
        for (std::uint32_t c : v) {
            sum_v += c;
            sum_v2 += static_cast<std::uint64_t>(c) * c;
        }

        // exact equality: sum v = #A * N
        if (sum_v != members.size() * N) {
            all_pass = false;
            if (first_violation.empty())
                first_violation = "count identity failed at trial " + std::to_string(t);
        }

        // pairwise gcd bound, exact rational comparison
        BigRat rhs42 = 0;
        for (std::uint64_t a1 : members)
            for (std::uint64_t a2 : members)
                rhs42 += 1 + BigRat(BigInt(N) * gcd_u64(a1, a2), BigInt(std::max(a1, a2)));
        BigRat margin42 = rhs42 - BigRat(BigInt(sum_v2));
        if (margin42 < 0) {
            all_pass = false;
            if (first_violation.empty())
                first_violation = "pairwise gcd bound failed at trial " + std::to_string(t);
        }
        double m42 = to_double(margin42);
        if (!have42 || m42 < worst42) {
            worst42 = m42;
            have42 = true;
        }

        // smooth envelope bound (needs N >= 2)
        if (N >= 2) {
            IntervalReal Ai{BigFloat(A), BigFloat(A)};
            IntervalReal lnA = log_iv(Ai);
            IntervalReal rhs45 =
                IntervalReal::point(static_cast<long>(members.size() * members.size())) +
                IntervalReal::point(2L) * Ai * IntervalReal::point(static_cast<long>(N)) *
                    (c1 * lnA + delta +
                     (IntervalReal::point(2L) * lnA + IntervalReal::point(2L)) /
                         (Ai - IntervalReal::point(1L)));
            IntervalReal m45 = rhs45 - IntervalReal::point(static_cast<long>(sum_v2));
            if (!(m45.lo().sign() > 0)) {
                all_pass = false;
                if (first_violation.empty())
                    first_violation = "envelope bound failed at trial " + std::to_string(t);
            }
            if (!have_worst || m45.lo() < worst45.lo()) {
                worst45 = m45;
                have_worst = true;
            }
        }
    }

    VerificationReport rep;
    rep.claim_id = "sec4.vA_counts";
    rep.module = "certify";
    rep.params = {{"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};
    rep.status = all_pass ? Status::pass : Status::fail;
    rep.margin_lo = have_worst ? worst45.lo().to_double() : 0.0;
    rep.margin_hi = have_worst ? worst45.hi().to_double() : 0.0;
    rep.mode = "interval";
    rep.seed = seed;
    rep.notes = all_pass ? ("count identity exact on all trials; min pairwise-bound margin " +
                            format_sig12(worst42))
                         : first_violation;
    return rep;
}

// ---------------------------------------------------------------------------
// asymptotic-section claims

namespace {

// exact decimal coefficients shared by several claims
const BigRat kCOmega(138402, 100000);  // 1.38402
const BigRat kCTau(15379, 10000);      // 1.5379
const BigRat kCLin(30758, 10000);      // 3.0758

VerificationReport claim_L51() {
    // Exponent 1/(2r) - 1.38402 ln2 ln(4r)/(r LL) - 1.5379(2r-1) ln2/(r LL)
    // >= 0 for LL >= a(r), integer r in [2, 64].  The coefficient identity
    // 2 * 1.5379 = 3.0758 makes the exponent equal (LL - a(r))/(2r LL), so the
    // bound holds with equality exactly at LL = a(r); the strictly positive
    // certificate is the LL-derivative a(r)/(2r LL^2) = 1/(2r a(r)) there.
    bool identity = (kCLin == 2 * kCTau);
    bool ok = identity;
    IntervalReal min_margin = IntervalReal::point(1L);
    bool have = false;
    for (unsigned r = 2; r <= 64 && ok; ++r) {
        IntervalReal ar = a_iv(IntervalReal::point(static_cast<long>(r)));
        if (!(ar.lo().sign() > 0)) {
            ok = false;
            break;
        }
        IntervalReal deriv = IntervalReal::point(1L) /
                             (IntervalReal::point(static_cast<long>(2 * r)) * ar);
        if (!(deriv.lo().sign() > 0)) ok = false;
        if (!have || deriv.lo() < min_margin.lo()) {
            min_margin = deriv;
            have = true;
        }
    }
    return make_claim_report(
        "L51", min_margin, ok, "grid+monotonicity",
        "boundary LL = a(r) gives exactly 0 by the coefficient identity 2*1.5379 = 3.0758 "
        "(checked in exact rationals); reported margin is the certified d/dLL = 1/(2r a(r)) "
        "at the boundary, so the exponent is strictly positive for LL > a(r); worst r = 64");
}

VerificationReport claim_L52() {
    // B_2(r, q) >= 2^(2-2/r) r^2 ((1-1/r)/r!)^(1/r) for q >= 2^(4r-2),
    // integer r in [2, 64].  At q = 2^(4r-2) the two sides agree exactly:
    // the ln2 coefficients satisfy (4r-2)/(2r) - (2 - 2/r) - 1/r = 0.
    bool ok = true;
    for (unsigned r = 2; r <= 64 && ok; ++r) {
        BigRat lhs = BigRat(4 * r - 2, 2 * r) - (BigRat(2) - BigRat(2, r)) - BigRat(1, r);
        if (lhs != 0) ok = false;
    }
    // d(ln B_2)/d(ln q) = 1/(2r) > 0; worst rate over the grid is at r = 64.
    IntervalReal margin = IntervalReal::from_rational(BigRat(1, 128));
    return make_claim_report(
        "L52", margin, ok, "grid+monotonicity",
        "boundary q = 2^(4r-2) gives exact equality (ln2-coefficient identity checked in "
        "exact rationals); reported margin is the growth rate d(ln B_2)/d(ln q) = 1/(2r) "
        "at r = 64, so B_2 strictly exceeds the floor for q > 2^(4r-2)");
}

VerificationReport claim_L53() {
    // ((r-1)/(r! 2r X))^(1/r) <= e/r for X >= 1, integer r in [2, 64];
    // X = 1 is the worst case.  Tail r > 64: (r-1)/(2rX) < 1 and
    // r! >= (r/e)^r give LHS <= (1/r!)^(1/r) <= e/r.
    IntervalReal e = IntervalReal::e();
    bool ok = true;
    IntervalReal min_margin = IntervalReal::point(1L);
    bool have = false;
    unsigned worst_r = 0;
    for (unsigned r = 2; r <= 64; ++r) {
        BigInt rfact = 1;
        for (unsigned i = 2; i <= r; ++i) rfact *= i;
        BigRat base = BigRat(BigInt(r - 1), rfact * (2 * r));
        IntervalReal lhs = pow_iv(IntervalReal::from_rational(base), BigRat(1, r));
        IntervalReal margin = e / IntervalReal::point(static_cast<long>(r)) - lhs;
        if (!(margin.lo().sign() > 0)) ok = false;
        if (!have || margin.lo() < min_margin.lo()) {
            min_margin = margin;
            worst_r = r;
            have = true;
        }
    }
    return make_claim_report("L53", min_margin, ok, "grid+monotonicity",
                             "X = 1 is the worst case (X divides the base); worst grid margin at r = " +
                                 std::to_string(worst_r) +
                                 "; for r > 64 the factorial bound r! >= (r/e)^r settles the tail");
}

// ln f(r) for the two power-tower claims: f(r) = (c0_factor * r * (2r)^(r/(r-1)))^(4r/(r-1));
// include_c0 adds ln(31 * 125e/36) inside.
IntervalReal ln_f_54(const IntervalReal& r, bool include_c0) {
    IntervalReal one = IntervalReal::point(1L);
    IntervalReal eps = one / (r - one);  // 1/(r-1)
    IntervalReal expo = IntervalReal::point(4L) * (one + eps);
    IntervalReal inner = log_iv(r) + (one + eps) * log_iv(IntervalReal::point(2L) * r);
    if (include_c0) {
        IntervalReal c0 = log_iv(IntervalReal::point(31L) * IntervalReal::point(125L) *
                                 IntervalReal::e() / IntervalReal::point(36L));
        inner = c0 + inner;
    }
    return expo * inner;
}

VerificationReport claim_L54a() {
    // (31 (125e/36) r (2r)^(r/(r-1)))^(4r/(r-1)) <= max{10^32, (25r)^8} for all
    // real r >= 2: verified subdivision on [2, 1000], closed-form envelope tail.
    auto margin_fn = [](const IntervalReal& rbox) {
        // RHS is nondecreasing in r, so bound it below by its value at the left
        // endpoint of the box.
        IntervalReal left(rbox.lo(), rbox.lo());
        IntervalReal rhs_a = IntervalReal::point(32L) * iv_ln10();
        IntervalReal rhs_b = IntervalReal::point(8L) * log_iv(IntervalReal::point(25L) * left);
        IntervalReal rhs = (rhs_b.lo() > rhs_a.lo()) ? rhs_b : rhs_a;
        return rhs - ln_f_54(rbox, true);
    };
    BigFloat min_main;
    bool ok_main = prove_positive_on(margin_fn, BigFloat(2.0), BigFloat(1000.0), 48, &min_main, true);

    // Tail r >= 1000 with eps = 1/(r-1):
    //   g(r) = 8 ln25 - 4 c0 - 4 ln2 - 4 eps c0 - (8 eps + 4 eps^2) ln2
    //          - (12 eps + 4 eps^2) ln r
    // and eps <= eps0, eps ln r <= ln(1000)/999 (both decreasing for r >= 3).
    IntervalReal c0 = log_iv(IntervalReal::point(31L) * IntervalReal::point(125L) * IntervalReal::e() /
                             IntervalReal::point(36L));
    IntervalReal eps0 = IntervalReal::point(1L) / IntervalReal::point(999L);
    IntervalReal m0 = log_iv(IntervalReal::point(1000L)) / IntervalReal::point(999L);
    IntervalReal tail = IntervalReal::point(8L) * log_iv(IntervalReal::point(25L)) -
                        IntervalReal::point(4L) * c0 - IntervalReal::point(4L) * iv_ln2() -
                        IntervalReal::point(4L) * eps0 * c0 -
                        (IntervalReal::point(8L) * eps0 + IntervalReal::point(4L) * eps0 * eps0) * iv_ln2() -
                        IntervalReal::point(12L) * m0 - IntervalReal::point(4L) * eps0 * m0;
    bool ok_tail = tail.lo().sign() > 0;

    bool ok = ok_main && ok_tail;
    BigFloat lo = ok_main ? BigFloat::min(min_main, tail.lo()) : tail.lo();
    IntervalReal margin(lo, lo);
    return make_claim_report(
        "L54a", margin, ok, "subdivision",
        "ln-domain margin against max{10^32, (25r)^8}; tightest near r = 400 where the two "
        "branches of the max meet; tail r >= 1000 by the closed-form envelope (ln r/(r-1) "
        "decreasing)");
}

// margin M(L) = c L - nr L/LL - ln LL - consts and its L-derivative, the shape
// shared by the two threshold claims below; nr = 1.38402 ln 2.
struct ThresholdShape {
    IntervalReal c;       // linear coefficient
    IntervalReal consts;  // L-independent part (subtracted)
    IntervalReal value(const IntervalReal& L) const {
        IntervalReal LL = log_iv(L);
        IntervalReal nr = IntervalReal::from_decimal("1.38402") * iv_ln2();
        return c * L - nr * L / LL - log_iv(LL) - consts;
    }
    IntervalReal deriv(const IntervalReal& L) const {
        IntervalReal LL = log_iv(L);
        IntervalReal nr = IntervalReal::from_decimal("1.38402") * iv_ln2();
        IntervalReal one = IntervalReal::point(1L);
        return c - nr * (LL - one) / (LL * LL) - one / (L * LL);
    }
};

// Certify M > 0 for all L >= L0: boundary value, derivative positive on
// [L0, 10 L0] by subdivision, then the decreasing-envelope dominance
// ((LL-1)/LL^2 and 1/(L LL) both decrease once LL >= 2).
bool certify_threshold_shape(const ThresholdShape& shape, const BigFloat& L0, IntervalReal* boundary) {
    IntervalReal L0i(L0, L0);
    *boundary = shape.value(L0i);
    if (!(boundary->lo().sign() > 0)) return false;
    IntervalReal LL0 = log_iv(L0i);
    if (!(LL0.lo() > BigFloat(2.0))) return false;  // envelope argument needs LL >= 2
    BigFloat L1 = L0 * BigFloat(10.0);
    if (!prove_positive_on([&](const IntervalReal& L) { return shape.deriv(L); }, L0, L1, 40, nullptr))
        return false;
    IntervalReal L1i(L1, L1);
    IntervalReal tail_deriv = shape.deriv(L1i);  // lower-bounds the derivative for L >= L1
    return tail_deriv.lo().sign() > 0;
}

VerificationReport claim_L54b() {
    // For each integer 2 <= r <= 9, at L = log q >= 1145 ln 10:
    //   (1/4 - 1/(4r)) L >= ln(r (2r)^(r/(r-1))) + 1.38402 ln2 L/LL + ln 2
    //                      + ln LL + ln(125e/36).
    // certify from the lower end of the 1145 ln 10 enclosure: a slightly
    // earlier boundary only enlarges the certified domain
    BigFloat L0 = (IntervalReal::point(1145L) * iv_ln10()).lo();
    bool ok = true;
    IntervalReal min_margin = IntervalReal::point(1L);
    bool have = false;
    unsigned worst_r = 0;
    for (unsigned r = 2; r <= 9; ++r) {
        IntervalReal rr = IntervalReal::point(static_cast<long>(r));
        IntervalReal one = IntervalReal::point(1L);
        ThresholdShape shape;
        shape.c = (one - one / rr) / IntervalReal::point(4L);
        shape.consts = log_iv(rr * pow_iv(IntervalReal::point(2L) * rr, rr / (rr - one))) + iv_ln2() +
                       log_iv(IntervalReal::point(125L) * IntervalReal::e() / IntervalReal::point(36L));
        IntervalReal boundary;
        if (!certify_threshold_shape(shape, L0, &boundary)) ok = false;
        if (!have || boundary.lo() < min_margin.lo()) {
            min_margin = boundary;
            worst_r = r;
            have = true;
        }
    }
    return make_claim_report(
        "L54b", min_margin, ok, "grid+monotonicity",
        "normalized by (1/4 - 1/(4r)); boundary margin is razor thin at r = " +
            std::to_string(worst_r) + " and the claim is monotone in L beyond the boundary");
}

VerificationReport claim_L54c() {
    // (r (2r)^(r/(r-1)))^((1/4 - 1/(4r))^(-1)) <= 741 r^8 for real r >= 10.
    // g(r) = ln741 - 4(1+eps)^2 ln2 - 4 eps (3+eps) ln r with eps = 1/(r-1);
    // both subtracted terms decrease in r, so the minimum is at r = 10.
    IntervalReal r10 = IntervalReal::point(10L);
    IntervalReal g10 = log_iv(IntervalReal::point(741L)) + IntervalReal::point(8L) * log_iv(r10) -
                       ln_f_54(r10, false);
    bool decreasing_ok = log_iv(IntervalReal::point(10L)).lo() > BigFloat(1.0);  // ln r/(r-1) decreasing
    bool ok = g10.lo().sign() > 0 && decreasing_ok;
    return make_claim_report(
        "L54c", g10, ok, "closed-form",
        "margin at r = 10 (ln domain); monotone increasing beyond since eps = 1/(r-1) and "
        "ln r/(r-1) both decrease for r >= 10");
}

VerificationReport claim_L54d() {
    // 1.38402 ln2 L/LL + ln 2 + ln LL <= L/8 for L >= 1008 ln 10.
    ThresholdShape shape;
    shape.c = IntervalReal::from_rational(BigRat(1, 8));
    shape.consts = iv_ln2();
    BigFloat L0 = (IntervalReal::point(1008L) * iv_ln10()).lo();
    IntervalReal boundary;
    bool ok = certify_threshold_shape(shape, L0, &boundary);
    return make_claim_report("L54d", boundary, ok, "subdivision",
                             "thin boundary margin at L = 1008 ln 10; derivative positive on "
                             "[L0, 10 L0] by subdivision and beyond by the decreasing envelope");
}

VerificationReport claim_L54e() {
    // (10r)^18 >= (741 r^8)^(9/4) (125e/36)^10 for r >= 10: the r-powers cancel
    // exactly (18 = (9/4) * 8), leaving an r-independent margin.
    bool exponents_cancel = (BigRat(18) == BigRat(9, 4) * 8);
    IntervalReal margin = IntervalReal::point(18L) * iv_ln10() -
                          IntervalReal::from_rational(BigRat(9, 4)) * log_iv(IntervalReal::point(741L)) -
                          IntervalReal::point(10L) * log_iv(IntervalReal::point(125L) * IntervalReal::e() /
                                                            IntervalReal::point(36L));
    bool ok = exponents_cancel && margin.lo().sign() > 0;
    return make_claim_report("L54e", margin, ok, "closed-form",
                             "r-powers cancel exactly (18 = 9/4 * 8, checked in exact rationals); "
                             "constant ln-domain margin for every r");
}

VerificationReport claim_L55() {
    // 27/(16 L) + 3/8 + 6/pi^2 < 1 for L >= 58 ln 10; the left side decreases
    // in L, so the boundary is the worst case.
    IntervalReal L0 = IntervalReal::point(58L) * iv_ln10();
    IntervalReal margin = IntervalReal::point(1L) - IntervalReal::point(27L) /
                                                        (IntervalReal::point(16L) * L0) -
                          IntervalReal::from_rational(BigRat(3, 8)) - six_over_pi2_iv();
    return make_claim_report("L55", margin, margin.lo().sign() > 0, "closed-form",
                             "boundary L = 58 ln 10 is the worst case (27/(16L) decreasing)");
}

VerificationReport claim_L55a() {
    // delta + (2 ln A + 2)/(A-1) <= (3/8) ln A for A >= 31.  The margin's
    // A-derivative 3/(8A) + (2 ln A + 2/A)/(A-1)^2 is a sum of positives, so
    // A = 31 is the worst case.
    IntervalReal A = IntervalReal::point(31L);
    IntervalReal lnA = log_iv(A);
    IntervalReal margin = IntervalReal::from_rational(BigRat(3, 8)) * lnA - compute_delta() -
                          (IntervalReal::point(2L) * lnA + IntervalReal::point(2L)) /
                              (A - IntervalReal::point(1L));
    return make_claim_report("L55a", margin, margin.lo().sign() > 0, "closed-form",
                             "boundary A = 31 is the worst case (margin derivative is a sum of "
                             "positive terms)");
}

}  // namespace

const std::vector<Claim>& section5_claims() {
    static const std::vector<Claim> claims = {
        {"L51",
         "1/(2r) - 1.38402 ln2 ln(4r)/(r LL) - 1.5379(2r-1) ln2/(r LL) >= 0 for LL >= a(r)",
         "integer r in [2, 64], LL >= a(r)", "grid+monotonicity"},
        {"L52", "B_2(r, q) >= 2^(2-2/r) r^2 ((1-1/r)/r!)^(1/r) for q >= 2^(4r-2)",
         "integer r in [2, 64]", "grid+monotonicity"},
        {"L53", "((r-1)/(r! 2r X))^(1/r) <= e/r for X >= 1", "integer r in [2, 64], X >= 1; tail r > 64",
         "grid+monotonicity"},
        {"L54a", "(31 (125e/36) r (2r)^(r/(r-1)))^(4r/(r-1)) <= max{10^32, (25r)^8}",
         "real r >= 2", "subdivision"},
        {"L54b",
         "q >= (r(2r)^(r/(r-1)))^k (2^(1.38402 L/LL) 2 LL)^k (125e/36)^k, k = (1/4-1/(4r))^(-1), "
         "at q = 10^1145 and beyond",
         "integer r in [2, 9], L >= 1145 ln 10", "grid+monotonicity"},
        {"L54c", "(r (2r)^(r/(r-1)))^((1/4-1/(4r))^(-1)) <= 741 r^8", "real r >= 10", "closed-form"},
        {"L54d", "1.38402 ln2 L/LL + ln 2 + ln LL <= L/8", "L >= 1008 ln 10", "subdivision"},
        {"L54e", "(10r)^18 >= (741 r^8)^(9/4) (125e/36)^10", "r >= 10", "closed-form"},
        {"L55", "27/(16 L) + 3/8 + 6/pi^2 < 1", "L >= 58 ln 10", "closed-form"},
        {"L55a", "delta + (2 ln A + 2)/(A-1) <= (3/8) ln A", "A >= 31", "closed-form"},
    };
    return claims;
}

VerificationReport verify_section5_claim(const std::string& id) {
    if (id == "L51") return claim_L51();
    if (id == "L52") return claim_L52();
    if (id == "L53") return claim_L53();
    if (id == "L54a") return claim_L54a();
    if (id == "L54b") return claim_L54b();
    if (id == "L54c") return claim_L54c();
    if (id == "L54d") return claim_L54d();
    if (id == "L54e") return claim_L54e();
    if (id == "L55") return claim_L55();
    if (id == "L55a") return claim_L55a();
    throw std::invalid_argument("unknown claim id: " + id);
}

std::vector<VerificationReport> verify_section5_claims() {
    std::vector<VerificationReport> out;
    for (const Claim& c : section5_claims()) out.push_back(verify_section5_claim(c.id));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; });
    return out;
}

}  // namespace exburgess
