#pragma once

// Rigorous verification of the paper-level numerical claims: the delta
// constant, the Mobius/totient partial-sum envelopes, the v_A counting
// lemmas, and the ten asymptotic-section claims (L51..L55a).  Everything
// here is interval arithmetic with outward rounding; "pass" means the
// margin's certified lower bound is strictly positive, and a method that
// cannot certify reports inconclusive rather than falling back to floats.

#include <cstdint>
#include <string>
#include <vector>

#include "exburgess/arith.hpp"
#include "exburgess/interval.hpp"
#include "exburgess/report.hpp"

namespace exburgess {

struct Claim {
    std::string id;
    std::string statement;
    std::string parameter_domain;
    std::string method;  // "grid+monotonicity", "subdivision", "closed-form"
};

// The ten claims of the asymptotic section, in report order.
const std::vector<Claim>& section5_claims();

// Enclosure of zeta'(2) = -sum_{n>=2} (ln n)/n^2: 10^5 exact terms plus the
// two-sided integral tail [ (ln(N+1)+1)/(N+1), (ln N + 1)/N ], outward
// rounded throughout.
IntervalReal zeta_prime_2_enclosure();

// delta = 6/pi^2 - 36 zeta'(2)/pi^4, enclosure of width < 1e-8.
IntervalReal compute_delta();
// Cached midpoint for non-certified consumers (bound diagnostics).
BigFloat delta_midpoint();

// For every 2 <= N <= N_max checks the partial sums
//   |sum_{d<=N} mu(d)/d^2 - 6/pi^2|          <= 1/(N-1)
//   |sum_{d<=N} mu(d) ln d/d^2 - 36 z'/pi^4| <= (ln(N-1)+1)/(N-1)
// with interval accumulation; margin is the worst case over N.
VerificationReport verify_mobius_lemma(std::uint32_t N_max);

// sum_{n<=N} phi(n)/n^2 <= 6/pi^2 ln N + delta + (2 ln N + 2)/(N-1).
VerificationReport verify_phi_sum_lemma(std::uint32_t N_max);

// Random instances of the v_A counting checks: exact equality
// sum_x v(x) = #A * N, plus the two upper bounds on sum_x v(x)^2 (the exact
// pairwise-gcd count and the smooth envelope).  Instances are drawn with
// q <= 10^4, N <= 10^3, 2 <= A <= 50 and arbitrary M, restricted to the
// regime 2A((M mod q) + N) < q in which the pairwise-ratio counting behind
// those bounds is valid (outside it wraparound congruence solutions can
// exceed both right sides).
VerificationReport verify_vA_lemmas(unsigned trials, std::uint64_t seed);

// All ten section-5 claims, sorted by claim id.
std::vector<VerificationReport> verify_section5_claims();
// One claim by id ("L51".."L55a"); throws on unknown id.
VerificationReport verify_section5_claim(const std::string& id);

}  // namespace exburgess
