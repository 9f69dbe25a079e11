#include "qrhc/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "qrhc/channels.hpp"
#include "qrhc/json_writer.hpp"
#include "qrhc/rng.hpp"
#include "qrhc/serialize.hpp"

namespace qrhc {

namespace {

constexpr double kGammaCap = 1.0 - 1e-6;
constexpr double kSpectrumSlop = 1e-10;

std::size_t projector_rank(const HermitianOperator& proj) {
  std::size_t rank = 0;
  for (double lam : proj.spectrum().eigenvalues) {
    if (std::abs(lam) <= kSpectrumSlop) continue;
    if (std::abs(lam - 1.0) <= kSpectrumSlop) {
      ++rank;
      continue;
    }
    throw std::invalid_argument("SubspaceInstance: projector eigenvalue " +
                                std::to_string(lam) + " is not in {0,1}");
  }
  if (rank == 0) throw std::invalid_argument("SubspaceInstance: projector has rank zero");
  return rank;
}

double size_parameter(double fraction) {
  // fraction = e^{-x^2/2}; clamp against roundoff pushing it past 1
  return std::sqrt(std::max(0.0, -2.0 * std::log(std::min(fraction, 1.0))));
}

}  // namespace

SubspaceInstance::SubspaceInstance(int n_qubits, HermitianOperator proj,
                                   HermitianOperator effect, double noise)
    : n(n_qubits), projector(std::move(proj)), m(std::move(effect)), gamma(noise) {
  if (n < 1 || n > 30) throw std::invalid_argument("SubspaceInstance: need 1 <= n <= 30");
  const std::size_t d = std::size_t{1} << n;
  if (projector.dim() != d || m.dim() != d)
    throw std::invalid_argument("SubspaceInstance: operator dimension is not 2^n");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("SubspaceInstance: gamma must lie in [0,1]");

  const std::size_t rank = projector_rank(projector);
  for (double lam : m.spectrum().eigenvalues)
    if (lam < -kSpectrumSlop || lam > 1.0 + kSpectrumSlop)
      throw std::invalid_argument("SubspaceInstance: effect eigenvalue " +
                                  std::to_string(lam) + " is outside [0,1]");
  const double tau_m = ntrace(m);
  if (!(tau_m > 0.0))
    throw std::domain_error("SubspaceInstance: effect has zero trace, size parameter diverges");

  s = size_parameter(static_cast<double>(rank) / static_cast<double>(d));
  t = size_parameter(tau_m);
}

double mixing_lhs(const SubspaceInstance& inst) {
  const std::size_t rank = projector_rank(inst.projector);
  const ComplexMatrix rho =
      inst.projector.matrix() * cplx(1.0 / static_cast<double>(rank));
  const ComplexMatrix evolved = depolarize_apply(inst.n, inst.gamma, rho);
  const double d = static_cast<double>(inst.m.dim());
  return d * ntrace_product(inst.m.matrix(), evolved);
}

MixingBound mixing_bound_theorem(double s, double t, double gamma) {
  if (!(s >= 0.0) || !std::isfinite(s) || !(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("mixing_bound_theorem: s and t must be finite and nonnegative");
  if (!(gamma >= 0.0 && gamma <= kGammaCap))
    throw std::invalid_argument(
        "mixing_bound_theorem: gamma must lie in [0, 1 - 1e-6]; the bound diverges at 1");
  MixingBound out;
  const double one_minus_g2 = 1.0 - gamma * gamma;
  out.value = std::exp(-0.5 * ((s * s + 2.0 * gamma * s * t + t * t) / one_minus_g2 - s * s));
  if (s > 0.0 && t > 0.0) {
    const double r = t / s;
    out.has_exponents = true;
    out.p = one_minus_g2 / (1.0 + gamma * r);
    out.q = r * one_minus_g2 / (gamma + r);
  }
  return out;
}

double mixing_bound_corollary(double sigma, double alpha, double gamma) {
  if (!(sigma > 0.0 && sigma <= 1.0))
    throw std::invalid_argument("mixing_bound_corollary: sigma must lie in (0,1]");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("mixing_bound_corollary: alpha must be finite and nonnegative");
  if (!(gamma >= 0.0 && gamma <= kGammaCap))
    throw std::invalid_argument(
        "mixing_bound_corollary: gamma must lie in [0, 1 - 1e-6]; the bound diverges at 1");
  const double root = std::sqrt(alpha) + gamma;
  return std::pow(sigma, root * root / (1.0 - gamma * gamma));
}

HermitianOperator random_projector(int n_qubits, std::size_t rank, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 30)
    throw std::invalid_argument("random_projector: need 1 <= n <= 30");
  const std::size_t d = std::size_t{1} << n_qubits;
  if (rank < 1 || rank > d)
    throw std::invalid_argument("random_projector: rank must lie in [1, 2^n]");
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(d, rng);
  ComplexMatrix p0(d);
  for (std::size_t i = 0; i < rank; ++i) p0(i, i) = 1.0;
  return HermitianOperator(u * p0 * u.adjoint(), 1e-8);
}

HermitianOperator random_measurement(int n_qubits, double tau_target, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 30)
    throw std::invalid_argument("random_measurement: need 1 <= n <= 30");
  if (!(tau_target > 0.0 && tau_target < 1.0))
    throw std::invalid_argument("random_measurement: tau target must lie in (0,1)");
  const std::size_t d = std::size_t{1} << n_qubits;
  const HermitianOperator raw = random_psd(d, seed, PositivityClass::PositiveSemiDefinite);
  const EighResult& es = raw.spectrum();
  std::vector<double> clipped(es.eigenvalues);
  double tau_r = 0.0;
  for (double& lam : clipped) {
    lam = std::clamp(lam, 0.0, 1.0);
    tau_r += lam;
  }
  tau_r /= static_cast<double>(d);
  const double beta =
      0.9 * std::min({1.0, tau_target / std::max(tau_r, 1e-300),
                      (1.0 - tau_target) / std::max(1.0 - tau_r, 1e-300)});
  const double c = (tau_target - beta * tau_r) / (1.0 - beta);
  ComplexMatrix diag(d);
  for (std::size_t i = 0; i < d; ++i) diag(i, i) = beta * clipped[i] + (1.0 - beta) * c;
  const ComplexMatrix& u = es.eigenvectors;
  return HermitianOperator(u * diag * u.adjoint(), 1e-8);
}

HermitianOperator orthogonal_measurement(const HermitianOperator& projector, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::invalid_argument("orthogonal_measurement: lambda must lie in (0,1]");
  const std::size_t d = projector.dim();
  ComplexMatrix out = ComplexMatrix::identity(d);
  out = out + projector.matrix() * cplx(-1.0);
  return HermitianOperator(out * cplx(lambda), 1e-8);
}

std::string subspace_instance_to_json(const SubspaceInstance& inst, int indent) {
  JsonValue root = JsonValue::object();
  root.set("n", inst.n);
  root.set("gamma", inst.gamma);
  root.set("s", inst.s);
  root.set("t", inst.t);
  root.set("projector", operator_to_json(inst.projector));
  root.set("m", operator_to_json(inst.m));
  return root.dump(indent);
}

SubspaceInstance subspace_instance_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("gamma") || !j.contains("projector") ||
      !j.contains("m"))
    throw std::invalid_argument("subspace_instance_from_json: missing field");
  SubspaceInstance inst(j.at("n").get<int>(),
                        operator_from_json(j.at("projector").dump()),
                        operator_from_json(j.at("m").dump()), j.at("gamma").get<double>());
  if (j.contains("s") && std::abs(j.at("s").get<double>() - inst.s) > 1e-12)
    throw std::invalid_argument("subspace_instance_from_json: stored s is inconsistent");
  if (j.contains("t") && std::abs(j.at("t").get<double>() - inst.t) > 1e-12)
    throw std::invalid_argument("subspace_instance_from_json: stored t is inconsistent");
  return inst;
}

}  // namespace qrhc
