#pragma once

// Exact enumeration of the 2r-tuple quantities behind the Weil-type moment
// inequality, and brute-force verification of that inequality and of the
// complete-sum bound it rests on.
//
// Convention: a tuple with every A_j = 0 (no coordinate distinct from all
// others) contributes 0 to s_q_exact.  The minimum in the definition ranges
// over an empty set for such tuples; they are never good tuples, so nothing
// downstream depends on the value, and 0 keeps the sum as tight as the
// enumeration can make it.

#include <complex>
#include <cstdint>
#include <vector>

#include "exburgess/arith.hpp"
#include "exburgess/characters.hpp"
#include "exburgess/report.hpp"

namespace exburgess {

struct TupleAnalysis {
    std::vector<std::int64_t> shifts;  // the 2r tuple b
    std::vector<BigInt> a_products;    // A_j = prod_{i != j} (b_i - b_j)
    unsigned distinct_count = 0;
    bool is_good = false;  // at least r+1 distinct entries
};

TupleAnalysis analyze_tuple(const std::vector<std::int64_t>& shifts, unsigned r);

// Enumeration budget: floor(B)^(2r) must not exceed this.
inline constexpr std::uint64_t kTupleBudget = 100000000;

// s_q(r, B) = sum over tuples in {1..floor(B)}^(2r) of
// min{ gcd(A_j, q) : A_j != 0 }, with the all-zero convention above.
// Requires B >= 2 and the budget; exact integer result.
BigInt s_q_exact(const FactoredInteger& q, unsigned r, double B);

// 2r (tau(q)/2)^(2r-1) floor(B)^(2r); exact rational.
BigRat bound_no_keep_gcd(const FactoredInteger& q, unsigned r, double B);
// 2r floor(B)^(2r) tau_{2r}(q); exact integer.
BigInt bound_keep_gcd(const FactoredInteger& q, unsigned r, double B);
// floor(B)^(2r) q; exact integer.
BigInt trivial_sq_bound(const FactoredInteger& q, unsigned r, double B);

// sum over x mod q of |sum_{1<=b<=B} chi(x+b)|^(2r), doubles throughout.
double weil_lhs(const DirichletCharacter& chi, unsigned r, double B);

// 2r (4r)^omega(q) B^(2r) m_r(q) sqrt(q) + (r^(2r)/r!) B^r q with real B,
// or floor(B) in the moment factor when use_floor is set (the sharper form).
double weil_rhs(const FactoredInteger& q, unsigned r, double B, bool use_floor = false);

struct WeilSweepConfig {
    std::uint64_t q_min = 1;
    std::uint64_t q_max = 100;
    std::vector<unsigned> r_set{2, 3};
    std::vector<double> B_set{2.0, 3.0};
    unsigned workers = 1;
};

// One report row per (q, primitive chi, r, B) with margin = rhs - lhs.
// For r >= 3 only cubefree q are admissible.  Rows sorted by
// (q, character index, r, B).
std::vector<VerificationReport> check_weil_sweep(const WeilSweepConfig& cfg);

// Good/bad tuple counts over {1..floor(B)}^(2r); bad tuples have at most r
// distinct values and satisfy bad <= r^(2r) * binom(floor(B), r).
std::pair<std::uint64_t, std::uint64_t> classify_tuples(double B, unsigned r);

// Checks |complete_poly_sum| <= (4r)^omega(q) sqrt(q) max{gcd(A_j, q): A_j != 0}
// for a good tuple; rejects tuples with fewer than r+1 distinct entries.
VerificationReport check_lemma_2_2(const DirichletCharacter& chi,
                                   const std::vector<std::int64_t>& shifts, unsigned r);

// Relative slack applied to float accumulations before comparing, so that a
// reported pass is conservative.
inline constexpr double kFloatSlack = 1e-6;

}  // namespace exburgess
