#include "exburgess/bounds.hpp"

#include <cmath>

#include "exburgess/certify.hpp"

namespace exburgess {

namespace {

const BigFloat& ln2() {
    static const BigFloat v = log_bf(BigFloat(2.0));
    return v;
}
const BigFloat& ln10() {
    static const BigFloat v = log_bf(BigFloat(10.0));
    return v;
}

BigFloat factorial_bf(unsigned r) {
    BigInt f = 1;
    for (unsigned i = 2; i <= r; ++i) f *= i;
    return BigFloat(f);
}

BigFloat ln_factorial(unsigned r) { return log_bf(factorial_bf(r)); }

// Nicolas-Robin constants as the paper prints them.
const BigFloat& nr_omega_coeff() {  // 1.38402
    static const BigFloat v("1.38402");
    return v;
}
const BigFloat& nr_tau_coeff() {  // 1.5379
    static const BigFloat v("1.5379");
    return v;
}

}  // namespace

BigFloat a_of_r_bf(unsigned r) {
    if (r < 2) throw std::invalid_argument("a_of_r: r must be >= 2");
    BigFloat rr(static_cast<long>(r));
    BigFloat inner = BigFloat("3.0758") * rr + nr_omega_coeff() * log_bf(BigFloat(4.0) * rr) -
                     BigFloat("1.5379");
    return BigFloat(2.0) * ln2() * inner;
}

double a_of_r(unsigned r) { return a_of_r_bf(r).to_double(); }

LogReal threshold_q(unsigned r, Variant variant) {
    BigFloat base = BigFloat(1145.0) * ln10();
    BigFloat other = variant == Variant::theorem1
                         ? exp_bf(a_of_r_bf(r))
                         : BigFloat(static_cast<long>(4 * r - 2)) * ln2();
    return LogReal::from_log(BigFloat::max(base, other));
}

BigFloat kappa_bf(const BigFloat& B, unsigned r) {
    if (!(B > BigFloat(1.0))) throw std::domain_error("kappa: B must exceed 1");
    BigFloat rr(static_cast<long>(r));
    BigFloat one_minus = BigFloat(1.0) - BigFloat(1.0) / rr;  // 1 - 1/r
    BigFloat two_minus = BigFloat(2.0) - BigFloat(1.0) / rr;  // 2 - 1/r
    BigFloat num = (B - BigFloat(1.0)) * pow_bf(B, one_minus);
    BigFloat den = BigFloat(2.0) * rr * pow_bf(B + BigFloat(1.0), two_minus);
    return pow_bf(num / den, rr / (rr - BigFloat(1.0)));
}

double kappa(double B, unsigned r) { return kappa_bf(BigFloat(B), r).to_double(); }

BigFloat B_min_bf(unsigned r) {
    BigFloat rr(static_cast<long>(r));
    BigFloat inv_r = BigFloat(1.0) / rr;
    return pow_bf(BigFloat(2.0), BigFloat(2.0) - BigFloat(2.0) * inv_r) * rr * rr *
           pow_bf((BigFloat(1.0) - inv_r) / factorial_bf(r), inv_r);
}

namespace {

// shared numerator of the C and D formulas without the kappa factor:
// 2^(5/2r - 1/2r^2) 3^(-1/2r) (r!)^(-1/2r^2) (r-1)^(1/2r^2 - 1/2r) r^(2/r - 1/2r^2)
BigFloat c_numerator_core(unsigned r) {
    BigFloat rr(static_cast<long>(r));
    BigFloat inv2r = BigFloat(1.0) / (BigFloat(2.0) * rr);
    BigFloat inv2r2 = inv2r / rr;
    BigFloat t = pow_bf(BigFloat(2.0), BigFloat(5.0) * inv2r - inv2r2);
    t = t * pow_bf(BigFloat(3.0), -inv2r);
    t = t * pow_bf(factorial_bf(r), -inv2r2);
    t = t * pow_bf(rr - BigFloat(1.0), inv2r2 - inv2r);
    t = t * pow_bf(rr, BigFloat(2.0) / rr - inv2r2);
    return t;
}

BigFloat C_of_r_bf(unsigned r) {
    BigFloat B = B_min_bf(r);
    BigFloat kap = kappa_bf(B, r);
    BigFloat rr(static_cast<long>(r));
    BigFloat inv2r = BigFloat(1.0) / (BigFloat(2.0) * rr);
    BigFloat num = c_numerator_core(r) * pow_bf(kap, -inv2r);
    BigFloat two_minus = BigFloat(2.0) - BigFloat(1.0) / rr;
    BigFloat den = (B - BigFloat(1.0)) / B -
                   BigFloat(2.0) * pow_bf(kap, BigFloat(1.0) - BigFloat(1.0) / rr) / two_minus *
                       pow_bf((B + BigFloat(1.0)) / B, two_minus);
    return num / den;
}

BigFloat D_of_r_bf(unsigned r) {
    BigFloat rr(static_cast<long>(r));
    BigFloat num = c_numerator_core(r) *
                   pow_bf(BigFloat(2.0) * rr, BigFloat(1.0) / (BigFloat(2.0) * rr - BigFloat(2.0)));
    BigFloat den = BigFloat(1.0) - BigFloat(1.0) / (BigFloat(2.0) * rr - BigFloat(1.0));
    return num / den;
}

}  // namespace

double C_of_r(unsigned r) {
    if (r < 2) throw std::invalid_argument("C_of_r: r must be >= 2");
    return C_of_r_bf(std::min(r, 10u)).to_double();  // table's ">= 10" row
}

double D_of_r(unsigned r) {
    if (r < 2) throw std::invalid_argument("D_of_r: r must be >= 2");
    return D_of_r_bf(std::min(r, 10u)).to_double();
}

double round_up_3(double x) { return std::ceil(x * 1000.0 - 1e-9) / 1000.0; }

std::vector<Table1Row> table1_rows() {
    static const double paper[9][2] = {{15.219, 8.362}, {5.359, 4.581}, {3.671, 3.396},
                                       {2.953, 2.811},  {2.549, 2.462}, {2.290, 2.229},
                                       {2.108, 2.063},  {1.973, 1.938}, {1.869, 1.841}};
    std::vector<Table1Row> rows;
    for (unsigned r = 2; r <= 10; ++r) {
        Table1Row row;
        row.r = r;
        row.C_computed = round_up_3(C_of_r(r));
        row.D_computed = round_up_3(D_of_r(r));
        row.C_paper = paper[r - 2][0];
        row.D_paper = paper[r - 2][1];
        rows.push_back(row);
    }
    return rows;
}

BoundContext BoundContext::exact(FactoredInteger q, unsigned r, Variant v) {
    if (r < 2) throw std::invalid_argument("BoundContext: r must be >= 2");
    if (q.value() < 1) throw std::invalid_argument("BoundContext: q must be >= 1");
    BoundContext ctx;
    ctx.r_ = r;
    ctx.variant_ = v;
    ctx.surrogate_ = false;
    ctx.log_q_ = log_bf(BigFloat(q.value()));
    ctx.q_ = std::move(q);
    ctx.C_ = C_of_r(r);
    ctx.threshold_ = threshold_q(r, v);
    return ctx;
}

BoundContext BoundContext::surrogate(BigFloat log_q, unsigned r, Variant v) {
    if (r < 2) throw std::invalid_argument("BoundContext: r must be >= 2");
    if (!(log_q > BigFloat(1.0)))
        throw std::invalid_argument("BoundContext: surrogate mode needs log q > 1");
    BoundContext ctx;
    ctx.r_ = r;
    ctx.variant_ = v;
    ctx.surrogate_ = true;
    ctx.log_q_ = std::move(log_q);
    ctx.C_ = C_of_r(r);
    ctx.threshold_ = threshold_q(r, v);
    return ctx;
}

BoundContext BoundContext::surrogate_log10(double log10_q, unsigned r, Variant v) {
    return surrogate(BigFloat(log10_q) * ln10(), r, v);
}

BigFloat BoundContext::log_moment_factor() const {
    BigFloat rr(static_cast<long>(r_));
    if (!surrogate_) {
        BigFloat w = BigFloat(static_cast<long>(omega(*q_))) * log_bf(BigFloat(4.0) * rr);
        BigRat m = m_r_exact(*q_, r_);
        return w + LogReal::from_rational(m).log_magnitude();
    }
    // Nicolas-Robin: (4r)^omega <= exp(1.38402 ln2 ln(4r) L/LL) and
    // m_r <= (tau/2)^(2r-1) <= exp((2r-1)(1.5379 ln2 L/LL - ln2)).
    BigFloat L = log_q_;
    BigFloat LL = log_bf(L);
    BigFloat t1 = nr_omega_coeff() * ln2() * log_bf(BigFloat(4.0) * rr) * L / LL;
    BigFloat t2 = BigFloat(static_cast<long>(2 * r_ - 1)) * (nr_tau_coeff() * ln2() * L / LL - ln2());
    return t1 + t2;
}

BigFloat BoundContext::log_q_over_phi() const {
    if (!surrogate_) {
        BigInt phi = euler_phi(*q_);
        return log_bf(BigFloat(q_->value())) - log_bf(BigFloat(phi));
    }
    // Rosser-Schoenfeld: q/phi(q) < e^gamma loglog q + 2.50637/loglog q
    BigFloat LL = log_bf(log_q_);
    BigFloat bound = exp_bf(BigFloat::euler_gamma(MPFR_RNDN)) * LL + BigFloat("2.50637") / LL;
    return log_bf(bound);
}

LogReal BoundContext::B_candidate() const {
    BigFloat rr(static_cast<long>(r_));
    BigFloat inv_r = BigFloat(1.0) / rr;
    BigFloat log_b = BigFloat(2.0) * log_bf(rr) + log_q_ / (BigFloat(2.0) * rr) +
                     inv_r * (log_bf(rr - BigFloat(1.0)) - ln_factorial(r_) -
                              log_bf(BigFloat(2.0) * rr));
    if (variant_ == Variant::theorem1) log_b = log_b - inv_r * log_moment_factor();
    return LogReal::from_log(log_b);
}

BigFloat BoundContext::kappa_value() const {
    // kappa at B = B_i(r, q), computed in log domain so astronomical B works
    LogReal B = B_candidate();
    LogReal one = LogReal::one();
    BigFloat rr(static_cast<long>(r_));
    LogReal num = (B - one) * B.pow(BigFloat(1.0) - BigFloat(1.0) / rr);
    LogReal den = LogReal::from_double(2.0 * r_) * (B + one).pow(BigFloat(2.0) - BigFloat(1.0) / rr);
    LogReal kap = (num / den).pow(rr / (rr - BigFloat(1.0)));
    return exp_bf(kap.log_magnitude());
}

LogReal BoundContext::beta() const {
    LogReal B = B_candidate();
    BigFloat log_denom = BigFloat(2.0) * log_bf(BigFloat(static_cast<long>(r_))) +
                         log_q_ / (BigFloat(2.0) * BigFloat(static_cast<long>(r_)));
    return LogReal::from_log(B.log_magnitude() - log_denom);
}

LogReal BoundContext::T_factor() const {
    BigFloat rr(static_cast<long>(r_));
    BigFloat E = BigFloat(1.0) / (BigFloat(2.0) * rr);
    if (variant_ == Variant::theorem1) E = E - BigFloat(1.0) / (BigFloat(2.0) * rr * rr);
    BigFloat log_t = E * log_moment_factor() + log_q_over_phi() / rr;
    return LogReal::from_log(log_t);
}

LogReal BoundContext::f_factor() const {
    if (variant_ == Variant::theorem1) return LogReal::from_double(static_cast<double>(r_));
    LogReal w = LogReal::from_log(log_moment_factor());
    return w * LogReal::from_double(static_cast<double>(r_ - 1)) + LogReal::one();
}

bool BoundContext::meets_threshold() const {
    return LogReal::from_log(log_q_) >= threshold_;
}

bool BoundContext::cubefree_ok() const {
    if (r_ == 2) return true;
    if (surrogate_) return true;  // unverifiable; evaluate_bound records a note
    return is_cubefree(*q_);
}

BoundResult evaluate_bound(const BoundContext& ctx, const LogReal& N) {
    if (N.sign() <= 0) throw std::invalid_argument("evaluate_bound: N must be >= 1");
    unsigned r = ctx.r();
    BigFloat rr(static_cast<long>(r));
    BigFloat L = ctx.log_q();

    BigFloat log_bound = log_bf(BigFloat(ctx.C()));
    log_bound = log_bound + (BigFloat(1.0) - BigFloat(1.0) / rr) * N.log_magnitude();
    log_bound = log_bound + (rr + BigFloat(1.0)) / (BigFloat(4.0) * rr * rr) * L;
    log_bound = log_bound + log_bf(L) / (BigFloat(2.0) * rr);
    BigFloat E = BigFloat(1.0) / (BigFloat(2.0) * rr);
    if (ctx.variant() == Variant::theorem1) E = E - BigFloat(1.0) / (BigFloat(2.0) * rr * rr);
    log_bound = log_bound + E * ctx.log_moment_factor();
    log_bound = log_bound + ctx.log_q_over_phi() / rr;

    BoundResult res;
    res.bound = LogReal::from_log(log_bound);
    bool ok = true;
    if (!ctx.meets_threshold()) {
        ok = false;
        res.reasons.push_back("q below the 10^1145 / t_i(r) applicability threshold");
    }
    if (!ctx.cubefree_ok()) {
        ok = false;
        res.reasons.push_back("q not cubefree (required for r >= 3)");
    }
    if (ctx.surrogate_mode() && r >= 3)
        res.notes.push_back("cubefree hypothesis not verifiable in surrogate mode");
    res.applicable = ok;

    // regime notes
    BigFloat logN = N.log_magnitude();
    if (logN > BigFloat(2.0) / BigFloat(3.0) * L)
        res.notes.push_back(
            "N > q^(2/3): the Polya-Vinogradov inequality gives a better bound "
            "(uncertified reference; not evaluated here)");
    BigFloat base_exp = BigFloat(0.25) + BigFloat(1.0) / (BigFloat(4.0) * rr);
    if (logN <= base_exp * L)
        res.notes.push_back("N <= q^(1/4 + 1/(4r)): trivial bound |S| <= N already suffices");
    return res;
}

BoundResult evaluate_bound_theta(const BoundContext& ctx, double theta) {
    if (theta <= 0) throw std::invalid_argument("theta must be positive");
    return evaluate_bound(ctx, LogReal::from_log(BigFloat(theta) * ctx.log_q()));
}

LogReal B_upper_bound(const BoundContext& ctx) {
    BigFloat rr(static_cast<long>(ctx.r()));
    return LogReal::from_log(BigFloat(1.0) + log_bf(rr) +
                             ctx.log_q() / (BigFloat(2.0) * rr));
}

BurgessIntermediates intermediates(const BoundContext& ctx, const LogReal& N, const LogReal& A,
                                   const LogReal& B) {
    unsigned r = ctx.r();
    BigFloat rr(static_cast<long>(r));
    BigFloat kap = ctx.kappa_value();
    LogReal kappaN = LogReal::from_bigfloat(kap) * N;
    LogReal AB = A * B;
    BigFloat rel_dev = BigFloat::abs(exp_bf(AB.log_magnitude() - kappaN.log_magnitude()) - BigFloat(1.0));
    if (rel_dev > BigFloat(1e-6))
        throw std::invalid_argument("intermediates: A*B must equal kappa*N (relative 1e-6)");

    BurgessIntermediates out;
    BigFloat L = ctx.log_q();

    // u = (N / #A)^(1/r) / q^(1/(2r^2)), with #A >= A phi* - 2^(omega-1)
    BigFloat log_phi_star = -ctx.log_q_over_phi();
    BigFloat log_two_omega;  // ln 2^omega
    if (!ctx.surrogate_mode()) {
        log_two_omega = BigFloat(static_cast<long>(omega(*ctx.q_exact()))) * log_bf(BigFloat(2.0));
    } else {
        BigFloat LL = log_bf(L);
        log_two_omega = BigFloat("1.38402") * log_bf(BigFloat(2.0)) * L / LL;
    }
    LogReal a_count = A * LogReal::from_log(log_phi_star) -
                      LogReal::from_log(log_two_omega - log_bf(BigFloat(2.0)));
    if (a_count.sign() <= 0)
        throw std::domain_error("intermediates: A phi* - 2^(omega-1) must be positive");
    LogReal u = (N / a_count).pow(BigFloat(1.0) / rr) /
                LogReal::from_log(L / (BigFloat(2.0) * rr * rr));
    out.u = u;

    // w = f_i / (r^2 beta^(r+1) r! log q)
    LogReal beta = ctx.beta();
    LogReal denom = LogReal::from_double(static_cast<double>(r) * r) * beta.pow(BigFloat(static_cast<long>(r + 1))) *
                    LogReal::from_bigfloat(factorial_bf(r)) * LogReal::from_log(log_bf(L));
    out.w = ctx.f_factor() / denom;

    // s = 2 C kappa^(1-1/r) / (2 - 1/r) * ((B+1)/B)^(2-1/r)
    BigFloat one_minus = BigFloat(1.0) - BigFloat(1.0) / rr;
    BigFloat two_minus = BigFloat(2.0) - BigFloat(1.0) / rr;
    LogReal s = LogReal::from_double(2.0 * ctx.C()) *
                LogReal::from_bigfloat(pow_bf(kap, one_minus)) /
                LogReal::from_bigfloat(two_minus) *
                ((B + LogReal::one()) / B).pow(two_minus);
    out.s = s;

    // alpha = (kappa phi* + B 2^(omega-1)/N)^2 / B
    //         + 2 kappa (6/pi^2 ln A + delta + (2 ln A + 2)/(A - 1))
    BigFloat lnA = A.log_magnitude();
    LogReal term1_inner = LogReal::from_bigfloat(kap) * LogReal::from_log(log_phi_star) +
                          B * LogReal::from_log(log_two_omega - log_bf(BigFloat(2.0))) / N;
    LogReal term1 = term1_inner.pow(BigFloat(2.0)) / B;
    BigFloat pi = BigFloat::pi(MPFR_RNDN);
    BigFloat six_over_pi2 = BigFloat(6.0) / (pi * pi);
    BigFloat delta = delta_midpoint();
    LogReal phi_sum_env = LogReal::from_bigfloat(six_over_pi2 * lnA + delta) +
                          (LogReal::from_log(log_bf(lnA)) * LogReal::from_double(2.0) +
                           LogReal::from_double(2.0)) /
                              (A - LogReal::one());
    LogReal term2 = LogReal::from_bigfloat(BigFloat(2.0) * kap) * phi_sum_env;
    out.alpha = term1 + term2;

    // P = alpha N^2 / B;  Q = 2r (4r)^omega B^(2r) m_r sqrt(q) + (r^(2r)/r!) B^r q
    out.P = out.alpha * N * N / B;
    LogReal W = LogReal::from_log(ctx.log_moment_factor());
    LogReal q_half = LogReal::from_log(L / BigFloat(2.0));
    LogReal q_full = LogReal::from_log(L);
    LogReal first = LogReal::from_double(2.0 * r) * W * B.pow(BigFloat(static_cast<long>(2 * r))) * q_half;
    LogReal second = LogReal::from_bigfloat(pow_bf(rr, BigFloat(static_cast<long>(2 * r))) / factorial_bf(r)) *
                     B.pow(rr) * q_full;
    out.Q = first + second;

    // alpha <= (4/3) kappa log q once q >= max{10^1145, (10r)^18, t_i(r)}
    LogReal q_as_logreal = LogReal::from_log(L);
    LogReal ten_r_18 = LogReal::from_log(BigFloat(18.0) * log_bf(BigFloat(10.0 * r)));
    bool above = q_as_logreal >= ctx.threshold() && q_as_logreal >= ten_r_18;
    out.alpha_postcondition_checked = above;
    if (above) {
        LogReal rhs = LogReal::from_bigfloat(BigFloat(4.0) / BigFloat(3.0) * kap * L);
        out.alpha_postcondition_holds = out.alpha <= rhs;
    }
    return out;
}

}  // namespace exburgess
