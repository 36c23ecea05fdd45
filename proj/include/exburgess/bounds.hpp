#pragma once

// Evaluation of the explicit Burgess bounds for composite moduli: the
// constant table C(r)/D(r), the derived quantities (B_i, kappa, beta, T_i,
// f_i, thresholds), and the bound itself in log domain.  Two modes:
//   exact     - q is factored; omega, m_r, phi/q are exact.
//   surrogate - only log q is known; omega/tau are replaced by their
//               Nicolas-Robin bounds and q/phi(q) by the Rosser-Schoenfeld
//               bound, the same substitutions the asymptotic analysis makes.
// Applicability of the theorems (q above the double-exponential threshold,
// cubefree when r >= 3) is reported as flags and reasons, never enforced:
// the formula can be evaluated anywhere.

#include <optional>
#include <string>
#include <vector>

#include "exburgess/arith.hpp"
#include "exburgess/logreal.hpp"

namespace exburgess {

enum class Variant { theorem1, theorem2 };

// a(r) = 2 log2 (3.0758 r + 1.38402 log(4r) - 1.5379); strictly increasing.
double a_of_r(unsigned r);
BigFloat a_of_r_bf(unsigned r);

// Smallest admissible q for the variant, as a LogReal:
//   theorem1: max(10^1145, e^(e^(a(r))));  theorem2: max(10^1145, 2^(4r-2)).
LogReal threshold_q(unsigned r, Variant variant);

// kappa(B, r) for B > 1; lies in (0, (1/(2r))^(r/(r-1))) and increases in B.
BigFloat kappa_bf(const BigFloat& B, unsigned r);
double kappa(double B, unsigned r);

// B lower bound used for the table: 2^(2-2/r) r^2 ((1-1/r)/r!)^(1/r).
BigFloat B_min_bf(unsigned r);

// Raw table constants (unrounded); C substitutes B_min into kappa and the
// C-denominator, D is the closed form of the B -> infinity limit.
double C_of_r(unsigned r);
double D_of_r(unsigned r);
// Value as emitted in the table: rounded up at the third decimal.
double round_up_3(double x);

struct Table1Row {
    unsigned r;
    double C_computed, D_computed;  // rounded up to 3 decimals
    double C_paper, D_paper;
};
std::vector<Table1Row> table1_rows();

class BoundContext {
  public:
    // Exact mode: q factored.  theorem1 needs the factorization anyway.
    static BoundContext exact(FactoredInteger q, unsigned r, Variant v);
    // Surrogate mode from log q (natural log).
    static BoundContext surrogate(BigFloat log_q, unsigned r, Variant v);
    static BoundContext surrogate_log10(double log10_q, unsigned r, Variant v);

    unsigned r() const { return r_; }
    Variant variant() const { return variant_; }
    bool surrogate_mode() const { return surrogate_; }
    const std::optional<FactoredInteger>& q_exact() const { return q_; }
    const BigFloat& log_q() const { return log_q_; }
    double C() const { return C_; }

    // ln((4r)^omega(q) m_r(q)), exact or Nicolas-Robin surrogate.
    BigFloat log_moment_factor() const;
    // ln(q/phi(q)), exact or Rosser-Schoenfeld surrogate.
    BigFloat log_q_over_phi() const;
    // B_i(r, q) as a LogReal (it is ~ q^(1/2r), astronomical for huge q).
    LogReal B_candidate() const;
    BigFloat kappa_value() const;  // kappa at B_i(r, q)
    LogReal beta() const;          // B / (r^2 q^(1/2r))
    LogReal T_factor() const;      // T_i(q)
    LogReal f_factor() const;      // f_1 = r, f_2 = (4r)^omega m_r (r-1) + 1
    LogReal threshold() const { return threshold_; }
    bool meets_threshold() const;
    bool cubefree_ok() const;  // r = 2, or q cubefree; true with note in surrogate mode

  private:
    BoundContext() = default;
    unsigned r_ = 2;
    Variant variant_ = Variant::theorem2;
    bool surrogate_ = false;
    std::optional<FactoredInteger> q_;
    BigFloat log_q_;
    double C_ = 0.0;
    LogReal threshold_;
};

struct BoundResult {
    LogReal bound;
    bool applicable = false;
    std::vector<std::string> reasons;  // failed applicability conditions
    std::vector<std::string> notes;    // regime remarks
};

// The theorem bound C(r) N^(1-1/r) q^((r+1)/4r^2) (log q)^(1/2r)
//   ((4r)^omega m_r)^E (q/phi)^(1/r)
// with E = 1/(2r) - 1/(2r^2) for theorem1 and 1/(2r) for theorem2.
BoundResult evaluate_bound(const BoundContext& ctx, const LogReal& N);
// N = q^theta.
BoundResult evaluate_bound_theta(const BoundContext& ctx, double theta);

struct BurgessIntermediates {
    LogReal u, w, s, alpha, P, Q;
    bool alpha_postcondition_checked = false;
    bool alpha_postcondition_holds = false;
};

// Diagnostic quantities of the proof at given N, A, B (A*B must equal
// kappa*N to relative 1e-6; violations throw std::invalid_argument).
BurgessIntermediates intermediates(const BoundContext& ctx, const LogReal& N, const LogReal& A,
                                   const LogReal& B);

// e*r*q^(1/2r) upper bound on B_i (holds for every r, q >= 2).
LogReal B_upper_bound(const BoundContext& ctx);

}  // namespace exburgess
