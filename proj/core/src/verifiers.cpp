#include "qrhc/verifiers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qrhc/serialize.hpp"

namespace qrhc {

namespace {

void require_psd(const HermitianOperator& f, const std::string& who) {
  if (classify(f) == PositivityClass::Indefinite)
    throw std::domain_error(who + ": operator must be positive semidefinite");
}

void require_pd(const HermitianOperator& f, const std::string& who) {
  if (classify(f) != PositivityClass::PositiveDefinite)
    throw std::domain_error(who + ": operator must be positive definite");
}

JsonValue fail_witness(const HermitianOperator& f) { return operator_to_json(f); }

JsonValue fail_witness(const HermitianOperator& f, const HermitianOperator& g) {
  JsonValue w = JsonValue::object();
  w.set("f", operator_to_json(f));
  w.set("g", operator_to_json(g));
  return w;
}

constexpr double kGammaSlop = 1e-12;  // boundary values computed in floating point

}  // namespace

VerificationReport verify_reverse_holder(const HermitianOperator& f, const HermitianOperator& g,
                                         const PExponent& p) {
  if (p.is_zero_limit())
    throw std::invalid_argument(
        "verify_reverse_holder: the p -> 0 limit has no conjugate exponent and is not supported");
  if (!(PExponent(0.0) < p && p <= PExponent(1.0)))
    throw std::invalid_argument("verify_reverse_holder: p must lie in (0,1]");
  if (f.dim() != g.dim()) throw std::invalid_argument("verify_reverse_holder: dimension mismatch");
  require_psd(f, "verify_reverse_holder");
  require_pd(g, "verify_reverse_holder");
  // the reverse conjugate of p = 1 is the limit of p/(p-1) from below: -inf
  const PExponent pc = p == PExponent(1.0) ? PExponent::neg_inf() : holder_conjugate(p);
  const double lhs = ntrace_product(f.matrix(), g.matrix());
  const double rhs = pnorm(f, p) * pnorm(g, pc);
  JsonValue::Object params{{"p", JsonValue(p.as_real())},
                           {"p_conj", JsonValue(pc.as_real())},
                           {"dim", JsonValue(f.dim())}};
  VerificationReport r =
      make_report("reverse-holder", std::move(params), lhs, rhs, lhs - rhs);
  if (!r.pass) r.witness = fail_witness(f, g);
  return r;
}

VerificationReport verify_reverse_minkowski(const HermitianOperator& f, const HermitianOperator& g,
                                            const PExponent& p) {
  if (p.is_zero_limit())
    throw std::invalid_argument("verify_reverse_minkowski: p = 0 is excluded");
  if (!(p < PExponent(1.0)))
    throw std::invalid_argument("verify_reverse_minkowski: p must be below 1");
  if (f.dim() != g.dim())
    throw std::invalid_argument("verify_reverse_minkowski: dimension mismatch");
  const bool negative = p.as_real() < 0.0;
  if (negative) {
    require_pd(f, "verify_reverse_minkowski");
    require_pd(g, "verify_reverse_minkowski");
  } else {
    require_psd(f, "verify_reverse_minkowski");
    require_psd(g, "verify_reverse_minkowski");
  }
  const HermitianOperator sum{f.matrix() + g.matrix()};
  const double lhs = pnorm(sum, p);
  const double rhs = pnorm(f, p) + pnorm(g, p);
  JsonValue::Object params{{"p", JsonValue(p.as_real())}, {"dim", JsonValue(f.dim())}};
  VerificationReport r =
      make_report("reverse-minkowski", std::move(params), lhs, rhs, lhs - rhs);
  if (!r.pass) r.witness = fail_witness(f, g);
  return r;
}

VerificationReport verify_variational(const HermitianOperator& f, const PExponent& p, int samples,
                                      std::uint64_t seed) {
  if (p.is_zero_limit()) throw std::invalid_argument("verify_variational: p = 0 is excluded");
  if (!p.is_finite() || !(p < PExponent(1.0)))
    throw std::invalid_argument("verify_variational: p must be finite and below 1");
  if (samples < 1) throw std::invalid_argument("verify_variational: samples must be positive");
  require_pd(f, "verify_variational");  // f^{p-1} always carries a negative power
  const PExponent pc = holder_conjugate(p);
  const double norm_p = pnorm(f, p);

  const HermitianOperator gstar_raw = mat_pow(f, p.value() - 1.0);
  const double scale = pnorm(gstar_raw, pc);
  const HermitianOperator gstar{gstar_raw.matrix() * cplx(1.0 / scale)};
  const double attained = ntrace_product(f.matrix(), gstar.matrix());

  double sampled_min = HUGE_VAL;
  for (int trial = 0; trial < samples; ++trial) {
    const HermitianOperator g0 =
        random_psd(f.dim(), seed + static_cast<std::uint64_t>(trial),
                   PositivityClass::PositiveDefinite);
    const double c = pnorm(g0, pc);
    sampled_min = std::min(sampled_min, ntrace_product(f.matrix(), g0.matrix()) / c);
  }

  // slack folds both halves of the claim: sampled values stay above the norm,
  // and g* attains it up to tol
  const double tol = default_tol_rel * std::max({1.0, std::abs(attained), std::abs(norm_p)});
  const double slack = std::min(sampled_min - norm_p, tol - std::abs(attained - norm_p));
  JsonValue::Object params{{"p", JsonValue(p.as_real())},
                           {"dim", JsonValue(f.dim())},
                           {"samples", JsonValue(samples)},
                           {"seed", JsonValue(seed)},
                           {"sampled_min", JsonValue(sampled_min)}};
  VerificationReport r =
      make_report("variational", std::move(params), attained, norm_p, slack);
  if (!r.pass) r.witness = fail_witness(f, gstar);
  return r;
}

VerificationReport verify_expansivity(const KrausChannel& t, const HermitianOperator& f,
                                      const PExponent& p) {
  if (!(p < PExponent(1.0)))
    throw std::invalid_argument("verify_expansivity: p must be below 1");
  if (!t.is_unital()) throw std::invalid_argument("verify_expansivity: channel must be unital");
  if (t.dim() != f.dim()) throw std::invalid_argument("verify_expansivity: dimension mismatch");
  if (p.as_real() <= 0.0)
    require_pd(f, "verify_expansivity");
  else
    require_psd(f, "verify_expansivity");
  const double lhs = pnorm(t.apply(f), p);
  const double rhs = pnorm(f, p);
  JsonValue::Object params{{"p", JsonValue(p.as_real())}, {"dim", JsonValue(f.dim())}};
  VerificationReport r = make_report("expansivity", std::move(params), lhs, rhs, lhs - rhs);
  if (!r.pass) r.witness = fail_witness(f);
  return r;
}

namespace {

// one side of the scalar comparison, with the exponent-1 limit form
double sv_term(double r, double x, double y) {
  if (r == 1.0) return (x - y) * (std::log(x) - std::log(y));
  const double rc = r / (r - 1.0);
  return r * rc * (std::pow(x, 1.0 / r) - std::pow(y, 1.0 / r)) *
         (std::pow(x, 1.0 / rc) - std::pow(y, 1.0 / rc));
}

void check_sv_exponents(double p, double q, const std::string& who) {
  if (!(q > 0.0 && p <= 2.0 && q <= p))
    throw std::invalid_argument(who + ": exponents must satisfy 0 < q <= p <= 2");
}

}  // namespace

VerificationReport sv_two_point(double x, double y, double p, double q) {
  check_sv_exponents(p, q, "sv_two_point");
  if (x < 0.0 || y < 0.0) throw std::domain_error("sv_two_point: x and y must be nonnegative");
  if (q <= 1.0 && (x <= 0.0 || y <= 0.0))
    throw std::domain_error(
        "sv_two_point: exponents at or below 1 need strictly positive x and y");
  const double lhs = sv_term(p, x, y);
  const double rhs = sv_term(q, x, y);
  JsonValue::Object params{{"x", JsonValue(x)},
                           {"y", JsonValue(y)},
                           {"p", JsonValue(p)},
                           {"q", JsonValue(q)}};
  return make_report("sv-two-point", std::move(params), lhs, rhs, rhs - lhs);
}

namespace {

// qq' E(g^{1/q'}, g^{1/q}) with the exponent-1 limit E(ln g, g)
double sv_operator_term(const LindbladGenerator& l, const HermitianOperator& g, double r) {
  if (r == 1.0)
    return dirichlet_form(l, mat_fun(g, [](double v) { return std::log(v); }, "log"), g);
  const double rc = r / (r - 1.0);
  return r * rc * dirichlet_form(l, mat_pow(g, 1.0 / rc), mat_pow(g, 1.0 / r));
}

}  // namespace

VerificationReport verify_stroock_varopoulos(const LindbladGenerator& l,
                                             const HermitianOperator& g, double p, double q) {
  check_sv_exponents(p, q, "verify_stroock_varopoulos");
  if (g.dim() != l.dim())
    throw std::invalid_argument("verify_stroock_varopoulos: dimension mismatch");
  if (!l.is_primitive())
    throw std::invalid_argument("verify_stroock_varopoulos: generator must be primitive");
  if (q <= 1.0)
    require_pd(g, "verify_stroock_varopoulos");  // negative powers or a log of g
  else
    require_psd(g, "verify_stroock_varopoulos");
  const double lhs = sv_operator_term(l, g, p);
  const double rhs = sv_operator_term(l, g, q);
  JsonValue::Object params{{"p", JsonValue(p)},
                           {"q", JsonValue(q)},
                           {"dim", JsonValue(g.dim())},
                           {"c0", JsonValue(l.c0())}};
  VerificationReport r =
      make_report("stroock-varopoulos", std::move(params), lhs, rhs, rhs - lhs);
  if (!r.pass) r.witness = fail_witness(g);
  return r;
}

VerificationReport verify_gross(const LindbladGenerator& l, const HermitianOperator& f, double p) {
  if (!(p > 0.0 && p <= 2.0 && p != 1.0))
    throw std::invalid_argument("verify_gross: p must lie in (0,2] and differ from 1");
  if (f.dim() != l.dim()) throw std::invalid_argument("verify_gross: dimension mismatch");
  if (!l.is_primitive()) throw std::invalid_argument("verify_gross: generator must be primitive");
  if (p < 1.0)
    require_pd(f, "verify_gross");
  else
    require_psd(f, "verify_gross");
  const HermitianOperator half = mat_pow(f, p / 2.0);
  const double lhs = dirichlet_form(l, half, half);
  const double rhs =
      p * p / (4.0 * (p - 1.0)) * dirichlet_form(l, mat_pow(f, p - 1.0), f);
  JsonValue::Object params{{"p", JsonValue(p)}, {"dim", JsonValue(f.dim())}};
  VerificationReport r = make_report("gross", std::move(params), lhs, rhs, rhs - lhs);
  if (!r.pass) r.witness = fail_witness(f);
  return r;
}

VerificationReport verify_plsi(const LindbladGenerator& l, const HermitianOperator& f, double p,
                               double alpha) {
  if (!(p > 0.0 && p <= 2.0 && p != 1.0))
    throw std::invalid_argument("verify_plsi: p must lie in (0,2] and differ from 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("verify_plsi: alpha must be positive");
  if (f.dim() != l.dim()) throw std::invalid_argument("verify_plsi: dimension mismatch");
  if (!l.is_primitive()) throw std::invalid_argument("verify_plsi: generator must be primitive");
  if (p < 1.0)
    require_pd(f, "verify_plsi");
  else
    require_psd(f, "verify_plsi");
  const double lhs = entropy(mat_pow(f, p));
  const double rhs =
      alpha * p * p / (4.0 * (p - 1.0)) * dirichlet_form(l, mat_pow(f, p - 1.0), f);
  JsonValue::Object params{{"p", JsonValue(p)},
                           {"alpha", JsonValue(alpha)},
                           {"dim", JsonValue(f.dim())}};
  VerificationReport r = make_report("p-lsi", std::move(params), lhs, rhs, rhs - lhs);
  if (!r.pass) r.witness = fail_witness(f);
  return r;
}

double norm_derivative(const LindbladGenerator& l, const HermitianOperator& f, double p,
                       const std::function<double(double)>& t_of_p,
                       const std::function<double(double)>& dt_dp) {
  if (p == 0.0) throw std::invalid_argument("norm_derivative: p must be nonzero");
  if (f.dim() != l.dim()) throw std::invalid_argument("norm_derivative: dimension mismatch");
  const HermitianOperator g = l.semigroup(t_of_p(p), f);
  if (p < 1.0) require_pd(g, "norm_derivative");
  const double tau_gp = ntrace(mat_pow(g, p));
  const double ent = entropy(mat_pow(g, p));
  const double energy = dirichlet_form(l, mat_pow(g, p - 1.0), g);
  return (ent - p * p * dt_dp(p) * energy) / (p * p * tau_gp);
}

double reverse_hc_gamma_bound(const PExponent& p, const PExponent& q) {
  if (p == q) return 1.0;
  return std::sqrt((1.0 - p.as_real()) / (1.0 - q.as_real()));
}

double forward_hc_gamma_bound(const PExponent& p, const PExponent& q) {
  if (p == q) return 1.0;
  if (q.is_pos_inf()) return 0.0;
  return std::sqrt((p.as_real() - 1.0) / (q.as_real() - 1.0));
}

double strong_reverse_holder_gamma_bound(const PExponent& p, const PExponent& q) {
  const double prod = (1.0 - p.as_real()) * (1.0 - q.as_real());
  return std::min(1.0, std::sqrt(prod));
}

VerificationReport verify_reverse_hc(const DepolarizingFamily& fam, const HermitianOperator& f,
                                     const PExponent& p, const PExponent& q) {
  if (q.is_neg_inf())
    throw std::invalid_argument("verify_reverse_hc: q must be finite or the zero limit");
  if (!(q <= p && p <= PExponent(1.0)))
    throw std::invalid_argument("verify_reverse_hc: exponents must satisfy q <= p <= 1");
  if (f.dim() != fam.dim()) throw std::invalid_argument("verify_reverse_hc: dimension mismatch");
  const double bound = reverse_hc_gamma_bound(p, q);
  if (fam.gamma > bound + kGammaSlop)
    throw std::invalid_argument("verify_reverse_hc: gamma " + std::to_string(fam.gamma) +
                                " exceeds the threshold " + std::to_string(bound));
  if (p.as_real() <= 0.0 || q.as_real() <= 0.0)
    require_pd(f, "verify_reverse_hc");
  else
    require_psd(f, "verify_reverse_hc");
  const double lhs = pnorm(depolarize_apply(fam, f), q);
  const double rhs = pnorm(f, p);
  JsonValue::Object params{{"n", JsonValue(fam.n)},
                           {"gamma", JsonValue(fam.gamma)},
                           {"gamma_bound", JsonValue(bound)},
                           {"p", JsonValue(p.as_real())},
                           {"q", JsonValue(q.as_real())}};
  VerificationReport r = make_report("reverse-hc", std::move(params), lhs, rhs, lhs - rhs);
  if (!r.pass) r.witness = fail_witness(f);
  return r;
}

VerificationReport verify_reverse_hc_semigroup(const LindbladGenerator& l,
                                               const HermitianOperator& f, const PExponent& p,
                                               const PExponent& q, double t, double alpha) {
  if (q.is_neg_inf())
    throw std::invalid_argument("verify_reverse_hc_semigroup: q must be finite or the zero limit");
  if (!(q <= p && p <= PExponent(1.0)))
    throw std::invalid_argument("verify_reverse_hc_semigroup: exponents must satisfy q <= p <= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("verify_reverse_hc_semigroup: alpha must be positive");
  if (f.dim() != l.dim())
    throw std::invalid_argument("verify_reverse_hc_semigroup: dimension mismatch");
  if (!l.is_primitive())
    throw std::invalid_argument("verify_reverse_hc_semigroup: generator must be primitive");
  double threshold = 0.0;
  if (!(p == q)) {
    if (p == PExponent(1.0))
      throw std::invalid_argument(
          "verify_reverse_hc_semigroup: the time threshold diverges as p -> 1");
    threshold = alpha / 4.0 * std::log((1.0 - q.as_real()) / (1.0 - p.as_real()));
  }
  if (t < threshold - kGammaSlop)
    throw std::invalid_argument("verify_reverse_hc_semigroup: t " + std::to_string(t) +
                                " is below the threshold " + std::to_string(threshold));
  if (p.as_real() <= 0.0 || q.as_real() <= 0.0)
    require_pd(f, "verify_reverse_hc_semigroup");
  else
    require_psd(f, "verify_reverse_hc_semigroup");
  const double lhs = pnorm(l.semigroup(t, f), q);
  const double rhs = pnorm(f, p);
  JsonValue::Object params{{"dim", JsonValue(l.dim())},
                           {"t", JsonValue(t)},
                           {"t_threshold", JsonValue(threshold)},
                           {"alpha", JsonValue(alpha)},
                           {"p", JsonValue(p.as_real())},
                           {"q", JsonValue(q.as_real())}};
  VerificationReport r =
      make_report("reverse-hc-semigroup", std::move(params), lhs, rhs, lhs - rhs);
  if (!r.pass) r.witness = fail_witness(f);
  return r;
}

VerificationReport verify_forward_hc(const DepolarizingFamily& fam, const HermitianOperator& f,
                                     const PExponent& p, const PExponent& q) {
  if (!(PExponent(1.0) <= p && p <= q))
    throw std::invalid_argument("verify_forward_hc: exponents must satisfy 1 <= p <= q");
  if (f.dim() != fam.dim()) throw std::invalid_argument("verify_forward_hc: dimension mismatch");
  const double bound = forward_hc_gamma_bound(p, q);
  if (fam.gamma > bound + kGammaSlop)
    throw std::invalid_argument("verify_forward_hc: gamma " + std::to_string(fam.gamma) +
                                " exceeds the threshold " + std::to_string(bound));
  const double lhs = pnorm(f, p);
  const double rhs = pnorm(depolarize_apply(fam, f), q);
  JsonValue::Object params{{"n", JsonValue(fam.n)},
                           {"gamma", JsonValue(fam.gamma)},
                           {"gamma_bound", JsonValue(bound)},
                           {"p", JsonValue(p.as_real())},
                           {"q", JsonValue(q.as_real())}};
  VerificationReport r = make_report("forward-hc", std::move(params), lhs, rhs, lhs - rhs);
  if (!r.pass) r.witness = fail_witness(f);
  return r;
}

VerificationReport verify_strong_reverse_holder(const DepolarizingFamily& fam,
                                                const HermitianOperator& f,
                                                const HermitianOperator& g, const PExponent& p,
                                                const PExponent& q) {
  if (!(p <= PExponent(1.0) && q <= PExponent(1.0)))
    throw std::invalid_argument("verify_strong_reverse_holder: p and q must be at most 1");
  if (f.dim() != fam.dim() || g.dim() != fam.dim())
    throw std::invalid_argument("verify_strong_reverse_holder: dimension mismatch");
  const double bound = strong_reverse_holder_gamma_bound(p, q);
  if (fam.gamma > bound + kGammaSlop)
    throw std::invalid_argument("verify_strong_reverse_holder: gamma " +
                                std::to_string(fam.gamma) + " exceeds the threshold " +
                                std::to_string(bound));
  if (p.as_real() <= 0.0)
    require_pd(f, "verify_strong_reverse_holder");
  else
    require_psd(f, "verify_strong_reverse_holder");
  if (q.as_real() <= 0.0)
    require_pd(g, "verify_strong_reverse_holder");
  else
    require_psd(g, "verify_strong_reverse_holder");
  const double lhs = ntrace_product(f.matrix(), depolarize_apply(fam, g).matrix());
  const double rhs = pnorm(f, p) * pnorm(g, q);
  JsonValue::Object params{{"n", JsonValue(fam.n)},
                           {"gamma", JsonValue(fam.gamma)},
                           {"gamma_bound", JsonValue(bound)},
                           {"p", JsonValue(p.as_real())},
                           {"q", JsonValue(q.as_real())}};
  VerificationReport r =
      make_report("strong-reverse-holder", std::move(params), lhs, rhs, lhs - rhs);
  if (!r.pass) r.witness = fail_witness(f, g);
  return r;
}

ChainChecks chain_reverse_hc(int n_qubits, const HermitianOperator& f, const PExponent& p,
                             const PExponent& q, double t, double alpha) {
  if (!(q.as_real() < 0.0) || q.is_neg_inf())
    throw std::invalid_argument("chain_reverse_hc: q must be finite and negative");
  if (!(PExponent(0.0) <= p && p < PExponent(1.0)))
    throw std::invalid_argument("chain_reverse_hc: p must lie in [0,1)");
  require_pd(f, "chain_reverse_hc");
  const LindbladGenerator l = LindbladGenerator::depolarizing_site_sum(n_qubits);
  if (f.dim() != l.dim()) throw std::invalid_argument("chain_reverse_hc: dimension mismatch");
  const double threshold = alpha / 4.0 * std::log((1.0 - q.as_real()) / (1.0 - p.as_real()));
  if (t < threshold - kGammaSlop)
    throw std::invalid_argument("chain_reverse_hc: t below the full threshold");
  const double t1 = alpha / 4.0 * std::log(1.0 / (1.0 - p.as_real()));

  const HermitianOperator mid = l.semigroup(t1, f);
  const HermitianOperator full_out = l.semigroup(t, f);
  const HermitianOperator relay = l.semigroup(t - t1, mid);

  const double norm_p = pnorm(f, p);
  const double mid_zero = pnorm(mid, PExponent::zero_limit());
  const double full_q = pnorm(full_out, q);
  const double relay_q = pnorm(relay, q);

  ChainChecks out{
      make_report("reverse-hc-chain-full",
                  {{"n", JsonValue(n_qubits)},
                   {"t", JsonValue(t)},
                   {"p", JsonValue(p.as_real())},
                   {"q", JsonValue(q.as_real())}},
                  full_q, norm_p, full_q - norm_p),
      make_report("reverse-hc-chain-leg1",
                  {{"n", JsonValue(n_qubits)}, {"t1", JsonValue(t1)}, {"p", JsonValue(p.as_real())}},
                  mid_zero, norm_p, mid_zero - norm_p),
      make_report("reverse-hc-chain-leg2",
                  {{"n", JsonValue(n_qubits)},
                   {"t_rest", JsonValue(t - t1)},
                   {"q", JsonValue(q.as_real())}},
                  relay_q, mid_zero, relay_q - mid_zero),
      std::abs(full_q - relay_q)};
  if (!out.full.pass) out.full.witness = fail_witness(f);
  if (!out.leg1.pass) out.leg1.witness = fail_witness(f);
  if (!out.leg2.pass) out.leg2.witness = fail_witness(mid);
  return out;
}

}  // namespace qrhc
