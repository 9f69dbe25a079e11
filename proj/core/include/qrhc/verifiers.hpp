#pragma once

#include <cstdint>
#include <functional>

#include "qrhc/channels.hpp"
#include "qrhc/functionals.hpp"
#include "qrhc/pnorms.hpp"
#include "qrhc/report.hpp"

namespace qrhc {

// Each verifier checks one inequality on one instance and returns a report
// whose slack is positive when the inequality is satisfied.  Hypothesis
// violations are contract errors (std::invalid_argument / std::domain_error);
// nothing is clamped.  Failing reports carry the witness operator(s).

// tau(fg) >= |f|_p |g|_p' for 0 < p <= 1 (p = 1 pairs with infinity);
// f PSD, g PD.  The p -> 0 limit has no conjugate and is rejected.
VerificationReport verify_reverse_holder(const HermitianOperator& f, const HermitianOperator& g,
                                         const PExponent& p);

// |f + g|_p >= |f|_p + |g|_p for p < 1, p != 0; f, g PSD (PD when p < 0)
VerificationReport verify_reverse_minkowski(const HermitianOperator& f, const HermitianOperator& g,
                                            const PExponent& p);

// |f|_p = inf{tau(fg) : g > 0, |g|_p' >= 1} for p < 1, p != 0.  Checks that
// `samples` random feasible g never beat |f|_p, and that g* proportional to
// f^{p-1} attains it.  The slack folds both: the sampled minimum's margin and
// the attainment defect tol - |tau(f g*) - |f|_p|.
VerificationReport verify_variational(const HermitianOperator& f, const PExponent& p,
                                      int samples = 1000, std::uint64_t seed = 0);

// |T(f)|_p >= |f|_p for unital T and p < 1 (any extended p below 1)
VerificationReport verify_expansivity(const KrausChannel& t, const HermitianOperator& f,
                                      const PExponent& p);

// scalar comparison lemma: pp'(x^{1/p}-y^{1/p})(x^{1/p'}-y^{1/p'}) <=
// qq'(...q...) for p >= q in (0,2]; exponent 1 enters via the limit form
// (x-y)(ln x - ln y); x,y > 0 required whenever a negative power or a log
// appears (any exponent <= 1), else x,y >= 0
VerificationReport sv_two_point(double x, double y, double p, double q);

// operator form: pp' E(g^{1/p'}, g^{1/p}) <= qq' E(g^{1/q'}, g^{1/q}),
// p >= q in (0,2], exponent 1 via E(ln g, g); L must be ergodic
VerificationReport verify_stroock_varopoulos(const LindbladGenerator& l,
                                             const HermitianOperator& g, double p, double q);

// E(f^{p/2}, f^{p/2}) <= (p^2/(4(p-1))) E(f^{p-1}, f), p in (0,2] minus {1}
VerificationReport verify_gross(const LindbladGenerator& l, const HermitianOperator& f, double p);

// Ent(f^p) <= (alpha p^2/(4(p-1))) E(f^{p-1}, f) with alpha the caller's
// 2-log-Sobolev constant for L (2 for depolarizing site sums)
VerificationReport verify_plsi(const LindbladGenerator& l, const HermitianOperator& f, double p,
                               double alpha);

// closed form of d/dp ln |T_{t(p)} f|_p evaluated at p:
//   (1/(p^2 tau(g^p))) (Ent(g^p) - p^2 t'(p) E(g^{p-1}, g)),  g = T_{t(p)} f
double norm_derivative(const LindbladGenerator& l, const HermitianOperator& f, double p,
                       const std::function<double(double)>& t_of_p,
                       const std::function<double(double)>& dt_dp);

// gamma thresholds of the three noisy inequalities; p = q gives 1
double reverse_hc_gamma_bound(const PExponent& p, const PExponent& q);
double forward_hc_gamma_bound(const PExponent& p, const PExponent& q);
double strong_reverse_holder_gamma_bound(const PExponent& p, const PExponent& q);

// |D_gamma^n(f)|_q >= |f|_p for q <= p <= 1 and gamma <= sqrt((1-p)/(1-q));
// f PSD, PD when p < 0 or q < 0 (or a zero-limit exponent appears)
VerificationReport verify_reverse_hc(const DepolarizingFamily& fam, const HermitianOperator& f,
                                     const PExponent& p, const PExponent& q);

// semigroup form: |e^{-tL}(f)|_q >= |f|_p for t >= (alpha/4) ln((1-q)/(1-p))
VerificationReport verify_reverse_hc_semigroup(const LindbladGenerator& l,
                                               const HermitianOperator& f, const PExponent& p,
                                               const PExponent& q, double t, double alpha);

// |D_gamma^n(f)|_q <= |f|_p for 1 <= p <= q and gamma <= sqrt((p-1)/(q-1));
// f any Hermitian
VerificationReport verify_forward_hc(const DepolarizingFamily& fam, const HermitianOperator& f,
                                     const PExponent& p, const PExponent& q);

// tau(f D_gamma^n(g)) >= |f|_p |g|_q for p,q <= 1 and
// gamma <= min(1, sqrt((1-p)(1-q)))
VerificationReport verify_strong_reverse_holder(const DepolarizingFamily& fam,
                                                const HermitianOperator& f,
                                                const HermitianOperator& g, const PExponent& p,
                                                const PExponent& q);

// Two-leg chain behind the q < 0 <= p < 1 case: with t1 = (alpha/4)ln(1/(1-p))
// the first leg reaches the geometric-mean norm, the remaining time covers
// (0 -> q), and the legs compose to the full statement.
struct ChainChecks {
  VerificationReport full;   // |T_t f|_q >= |f|_p
  VerificationReport leg1;   // |T_t1 f|_0 >= |f|_p
  VerificationReport leg2;   // |T_{t-t1} T_t1 f|_q >= |T_t1 f|_0
  double semigroup_gap;      // | |T_t f|_q - |T_{t-t1}(T_t1 f)|_q |
};
ChainChecks chain_reverse_hc(int n_qubits, const HermitianOperator& f, const PExponent& p,
                             const PExponent& q, double t, double alpha = 2.0);

}  // namespace qrhc
