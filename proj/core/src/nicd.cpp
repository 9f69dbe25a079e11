#include "qrhc/nicd.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qrhc/channels.hpp"
#include "qrhc/mathutil.hpp"
#include "qrhc/mixing.hpp"
#include "qrhc/rng.hpp"

namespace qrhc {

namespace {

constexpr double kSpectrumSlop = 1e-10;
constexpr double kGammaCap = 1.0 - 1e-6;

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u;
  double worst = 0.0;
  for (std::size_t i = 0; i < gram.dim(); ++i)
    for (std::size_t j = 0; j < gram.dim(); ++j) {
      const cplx want = i == j ? cplx(1.0) : cplx(0.0);
      worst = std::max(worst, std::abs(gram(i, j) - want));
    }
  return worst;
}

void csv_number(char* buf, std::size_t cap, double x) { std::snprintf(buf, cap, "%.17g", x); }

}  // namespace

NicdInstance::NicdInstance(int n_qubits, ComplexMatrix basis_cols, HermitianOperator effect,
                           double noise, std::uint64_t players)
    : n(n_qubits), basis(std::move(basis_cols)), m(std::move(effect)), gamma(noise), k(players) {
  if (n < 1 || n > 10) throw std::invalid_argument("NicdInstance: need 1 <= n <= 10");
  const std::size_t d = std::size_t{1} << n;
  if (basis.dim() != d || m.dim() != d)
    throw std::invalid_argument("NicdInstance: operator dimension is not 2^n");
  if (unitarity_defect(basis) > 1e-10)
    throw std::invalid_argument("NicdInstance: basis matrix is not unitary");
  for (double lam : m.spectrum().eigenvalues)
    if (lam < -kSpectrumSlop || lam > 1.0 + kSpectrumSlop)
      throw std::invalid_argument("NicdInstance: effect eigenvalue " + std::to_string(lam) +
                                  " is outside [0,1]");
  if (std::abs(ntrace(m) - 0.5) > 1e-10)
    throw std::invalid_argument("NicdInstance: effect is not balanced, tau(M) != 1/2");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("NicdInstance: gamma must lie in [0,1]");
  if (k < 1) throw std::invalid_argument("NicdInstance: need at least one player");
}

NicdResult success_probability(const NicdInstance& inst) {
  const std::size_t d = inst.m.dim();
  // the channel is self-adjoint for the normalized trace, so
  // tr(M D(|psi><psi|)) = <psi| D(M) |psi> and one channel application serves
  // every basis state
  const ComplexMatrix evolved = depolarize_apply(inst.n, inst.gamma, inst.m.matrix());
  NicdResult out;
  out.per_state.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    cplx acc = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      cplx row = 0.0;
      for (std::size_t b = 0; b < d; ++b) row += evolved(a, b) * inst.basis(b, i);
      acc += std::conj(inst.basis(a, i)) * row;
    }
    out.per_state[i] = acc.real();
  }
  double sum_m = 0.0, sum_not = 0.0;
  for (double p : out.per_state) {
    sum_m += pow_int(p, inst.k);
    sum_not += pow_int(1.0 - p, inst.k);
  }
  out.p_all_m = sum_m / static_cast<double>(d);
  out.p_all_not_m = sum_not / static_cast<double>(d);
  return out;
}

NicdBound nicd_bound_rhs(double delta, double gamma, std::uint64_t k) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("nicd_bound_rhs: delta must lie in (0,1)");
  if (!(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("nicd_bound_rhs: gamma must lie in [0,1)");
  if (k < 1) throw std::invalid_argument("nicd_bound_rhs: need k >= 1");
  NicdBound out;
  const double log_inv = std::log(1.0 / delta);
  const double one_minus_g2 = 1.0 - gamma * gamma;
  out.term_a = std::pow(delta, 1.0 / static_cast<double>(k));
  const double root = 1.0 / std::sqrt(log_inv) + gamma;
  out.term_b = std::pow(delta, root * root / one_minus_g2);
  out.combined = out.term_a + out.term_b;
  out.factor_flat = std::exp(-1.0 / one_minus_g2);
  out.factor_cross = std::exp(-2.0 * gamma * std::sqrt(log_inv) / one_minus_g2);
  out.factor_decay = std::pow(delta, gamma * gamma / one_minus_g2);
  return out;
}

VerificationReport verify_nicd_contradiction(const NicdInstance& inst, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("verify_nicd_contradiction: delta must lie in (0,1)");
  const NicdResult res = success_probability(inst);
  // slop keeps boundary instances (p_all_m = 2 delta exactly) usable
  if (res.p_all_m < 2.0 * delta - 1e-12)
    throw std::invalid_argument(
        "verify_nicd_contradiction: inapplicable, p_all_m < 2 delta so the averaging step "
        "gives no subspace");

  const std::size_t d = inst.m.dim();
  std::size_t dim_s = 0;
  double fail_mass = 0.0;  // sum over S of tr[(I-M) D(|psi><psi|)]
  for (double p : res.per_state) {
    if (pow_int(p, inst.k) >= delta) {
      ++dim_s;
      fail_mass += 1.0 - p;
    }
  }
  const double sigma = static_cast<double>(dim_s) / static_cast<double>(d);
  const double markov_slack = sigma - delta;

  const double floor_lhs = fail_mass / static_cast<double>(dim_s);
  const double floor_rhs = 1.0 - std::pow(delta, 1.0 / static_cast<double>(inst.k));
  const double floor_slack = floor_rhs - floor_lhs;

  const bool ceiling_skipped = dim_s == d || inst.gamma > kGammaCap;
  double ceiling_bound = 0.0;
  double ceiling_slack = 0.0;
  double alpha = 0.0;
  if (!ceiling_skipped) {
    alpha = 1.0 / std::log2(1.0 / sigma);
    ceiling_bound = mixing_bound_corollary(sigma, alpha, inst.gamma);
    ceiling_slack = floor_lhs - ceiling_bound;
  }

  double slack = std::min(markov_slack, floor_slack);
  if (!ceiling_skipped) slack = std::min(slack, ceiling_slack);

  JsonValue::Object params;
  params.emplace_back("n", inst.n);
  params.emplace_back("k", static_cast<std::int64_t>(inst.k));
  params.emplace_back("gamma", inst.gamma);
  params.emplace_back("delta", delta);
  params.emplace_back("p_all_m", res.p_all_m);
  params.emplace_back("dim_s", static_cast<std::int64_t>(dim_s));
  params.emplace_back("sigma", sigma);
  params.emplace_back("markov_slack", markov_slack);
  params.emplace_back("floor_slack", floor_slack);
  if (ceiling_skipped) {
    params.emplace_back("ceiling_slack", "skipped");
    params.emplace_back("ceiling_skipped",
                        dim_s == d ? "sigma = 1, exponent diverges" : "gamma too close to 1");
  } else {
    params.emplace_back("alpha", alpha);
    params.emplace_back("ceiling_slack", ceiling_slack);
  }
  return make_report("nicd-contradiction", std::move(params), floor_lhs,
                     ceiling_skipped ? floor_rhs : ceiling_bound, slack);
}

ComplexMatrix nicd_basis(BasisFamily family, int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 10)
    throw std::invalid_argument("nicd_basis: need 1 <= n <= 10");
  const std::size_t d = std::size_t{1} << n_qubits;
  switch (family) {
    case BasisFamily::Product:
      return ComplexMatrix::identity(d);
    case BasisFamily::Ghz: {
      // Hadamard on qubit 1 (most significant bit), then CNOTs down the chain
      const double r = 1.0 / std::sqrt(2.0);
      ComplexMatrix u(d);
      const std::size_t top = d >> 1;
      for (std::size_t x = 0; x < d; ++x) {
        const std::size_t rest = x & (top - 1);
        u(rest, x) += r;
        u(rest | top, x) += (x & top) ? -r : r;
      }
      for (int ctrl = 1; ctrl < n_qubits; ++ctrl) {
        const std::size_t cbit = std::size_t{1} << (n_qubits - ctrl);
        const std::size_t tbit = cbit >> 1;
        ComplexMatrix next(d);
        for (std::size_t x = 0; x < d; ++x) {
          const std::size_t y = (x & cbit) ? (x ^ tbit) : x;
          for (std::size_t a = 0; a < d; ++a) next(y, a) = u(x, a);
        }
        u = next;
      }
      return u;
    }
    case BasisFamily::Haar: {
      Rng rng(seed);
      return random_unitary(d, rng);
    }
  }
  throw std::invalid_argument("nicd_basis: unknown family");
}

HermitianOperator nicd_effect(EffectFamily family, int n_qubits, const ComplexMatrix& basis,
                              std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 10)
    throw std::invalid_argument("nicd_effect: need 1 <= n <= 10");
  const std::size_t d = std::size_t{1} << n_qubits;
  switch (family) {
    case EffectFamily::MajorityDiagonal: {
      ComplexMatrix out(d);
      for (std::size_t x = 0; x < d; ++x) {
        const int ones = std::popcount(x);
        const int zeros = n_qubits - ones;
        out(x, x) = ones > zeros ? 1.0 : ones == zeros ? 0.5 : 0.0;
      }
      return HermitianOperator(out);
    }
    case EffectFamily::HalfProjector: {
      if (basis.dim() != d)
        throw std::invalid_argument("nicd_effect: basis dimension is not 2^n");
      ComplexMatrix out(d);
      for (std::size_t col = 0; col < d / 2; ++col)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            out(a, b) += basis(a, col) * std::conj(basis(b, col));
      return HermitianOperator(out, 1e-8);
    }
    case EffectFamily::RandomBalanced:
      return random_measurement(n_qubits, 0.5, seed);
  }
  throw std::invalid_argument("nicd_effect: unknown family");
}

SweepTable entangled_basis_sweep(int n_qubits, std::uint64_t k, double gamma,
                                 BasisFamily basis_family, EffectFamily effect_family,
                                 std::uint64_t seed, double envelope_c) {
  if (k < 1) throw std::invalid_argument("entangled_basis_sweep: need k >= 1");
  const ComplexMatrix basis = nicd_basis(basis_family, n_qubits, seed);
  const HermitianOperator effect = nicd_effect(effect_family, n_qubits, basis, seed + 1);
  const NicdInstance base(n_qubits, basis, effect, gamma, 1);
  const NicdResult res = success_probability(base);
  const double d = static_cast<double>(effect.dim());

  const char* basis_id = basis_family == BasisFamily::Product ? "product"
                         : basis_family == BasisFamily::Ghz   ? "ghz"
                                                              : "haar";
  const char* m_id = effect_family == EffectFamily::MajorityDiagonal ? "majority"
                     : effect_family == EffectFamily::HalfProjector  ? "half-projector"
                                                                     : "random-balanced";

  SweepTable table;
  std::uint64_t players = 1;
  bool done = false;
  while (!done) {
    if (players >= k) {
      players = k;
      done = true;
    }
    double sum_m = 0.0, sum_not = 0.0;
    for (double p : res.per_state) {
      sum_m += pow_int(p, players);
      sum_not += pow_int(1.0 - p, players);
    }
    table.rows.push_back(
        {basis_id, m_id, n_qubits, players, gamma, sum_m / d, sum_not / d});
    players *= 2;
  }

  table.envelope_c = envelope_c;
  const double nu = 1.0 / (gamma * gamma) - 1.0;
  const double kk = static_cast<double>(k);
  table.envelope = std::pow(std::exp(envelope_c * std::sqrt(std::log(kk))) / kk, nu);
  return table;
}

std::string sweep_table_to_csv(const SweepTable& table) {
  std::string out = "basis_id,M_id,n,k,gamma,p_all_M,p_all_notM\n";
  char buf[64];
  for (const SweepRow& row : table.rows) {
    out += row.basis_id;
    out += ',';
    out += row.m_id;
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.k);
    out += ',';
    csv_number(buf, sizeof buf, row.gamma);
    out += buf;
    out += ',';
    csv_number(buf, sizeof buf, row.p_all_m);
    out += buf;
    out += ',';
    csv_number(buf, sizeof buf, row.p_all_not_m);
    out += buf;
    out += '\n';
  }
  return out;
}

JsonValue sweep_table_to_json(const SweepTable& table) {
  JsonValue rows = JsonValue::array();
  for (const SweepRow& row : table.rows) {
    JsonValue r = JsonValue::object();
    r.set("basis_id", row.basis_id);
    r.set("m_id", row.m_id);
    r.set("n", row.n);
    r.set("k", static_cast<std::int64_t>(row.k));
    r.set("gamma", row.gamma);
    r.set("p_all_m", row.p_all_m);
    r.set("p_all_not_m", row.p_all_not_m);
    rows.append(std::move(r));
  }
  JsonValue root = JsonValue::object();
  root.set("rows", std::move(rows));
  root.set("envelope", table.envelope);
  root.set("envelope_c", table.envelope_c);
  return root;
}

}  // namespace qrhc
