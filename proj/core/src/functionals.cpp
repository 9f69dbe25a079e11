#include "qrhc/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrhc/config.hpp"
#include "qrhc/rng.hpp"

namespace qrhc {

double entropy_values(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("entropy: empty spectrum");
  double scale = 0.0, lo = HUGE_VAL;
  for (double v : values) {
    scale = std::max(scale, std::abs(v));
    lo = std::min(lo, v);
  }
  if (lo < -eps_pd * scale)
    throw std::domain_error("entropy: operator is not positive semidefinite (eigenvalue " +
                            std::to_string(lo) + ")");
  const double d = static_cast<double>(values.size());
  double tau = 0.0;
  for (double v : values) tau += v;
  tau /= d;
  if (!(tau > 0.0)) throw std::domain_error("entropy: normalized trace must be positive");
  double acc = 0.0;
  for (double v : values) {
    const double x = (v <= eps_pd * scale) ? 0.0 : v;
    if (x > 0.0) acc += x * std::log(x);  // 0 log 0 = 0
  }
  return acc / d - tau * std::log(tau);
}

double entropy(const HermitianOperator& f) { return entropy_values(f.spectrum().eigenvalues); }

double dirichlet_form(const LindbladGenerator& l, const HermitianOperator& f,
                      const HermitianOperator& g) {
  return ntrace_product(f.matrix(), l.apply(g).matrix());
}

InducedTransitionMatrix induced_transition_matrix(const KrausChannel& t,
                                                  const HermitianOperator& g) {
  if (t.dim() != g.dim())
    throw std::invalid_argument("induced_transition_matrix: dimension mismatch");
  if (!t.is_unital())
    throw std::invalid_argument("induced_transition_matrix: channel must be unital");
  {
    const double defect = superoperator(t).hermiticity_defect();
    if (defect > 1e-10)
      throw std::invalid_argument("induced_transition_matrix: channel must be reversible "
                                  "(superoperator defect " +
                                  std::to_string(defect) + ")");
  }
  const std::size_t d = t.dim();
  const ComplexMatrix& u = g.spectrum().eigenvectors;
  InducedTransitionMatrix out{d, std::vector<double>(d * d, 0.0)};
  for (const auto& a : t.kraus_ops()) {
    const ComplexMatrix b = u.adjoint() * a * u;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out.p[i * d + j] += std::norm(b(i, j));
  }
  for (std::size_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      row += out(i, j);
      if (std::abs(out(i, j) - out(j, i)) > 1e-10)
        throw std::runtime_error("induced_transition_matrix: symmetry defect");
    }
    if (std::abs(row - 1.0) > 1e-10)
      throw std::runtime_error("induced_transition_matrix: row sum defect");
  }
  return out;
}

namespace {

// Ratio Ent(f^2)/E(f,f) for f = U diag(e^{u}) U^dagger, with guards keeping
// the evaluation numerically meaningful.  Returns -inf for rejected points.
double lsi_ratio(const LindbladGenerator& l, const ComplexMatrix& basis,
                 const std::vector<double>& u) {
  const std::size_t d = u.size();
  std::vector<double> clipped(d);
  double mean_u = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    clipped[i] = std::clamp(u[i], -15.0, 15.0);
    mean_u += clipped[i];
  }
  mean_u /= static_cast<double>(d);
  // the ratio is scale invariant, so recenter to keep the spectrum near 1
  // where the entropy evaluation loses the fewest digits
  std::vector<double> lam(d), lam2(d);
  for (std::size_t i = 0; i < d; ++i) {
    lam[i] = std::exp(clipped[i] - mean_u);
    lam2[i] = lam[i] * lam[i];
  }
  double tau2 = 0.0;
  for (double x : lam2) tau2 += x;
  tau2 /= static_cast<double>(d);
  // flatness floor: too close to a multiple of the identity and the ratio
  // becomes 0/0 at machine precision
  double dev = 0.0;
  for (double x : lam2) dev = std::max(dev, std::abs(x / tau2 - 1.0));
  if (dev < 1e-3) return -HUGE_VAL;

  ComplexMatrix fm(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) acc += basis(i, k) * lam[k] * std::conj(basis(j, k));
      fm(i, j) = acc;
    }
  const HermitianOperator f(std::move(fm), 1e-8);
  const double ent = entropy_values(lam2);
  const double energy = dirichlet_form(l, f, f);
  if (!(energy > 1e-13 * tau2)) return -HUGE_VAL;
  return ent / energy;
}

ComplexMatrix unitary_from_params(const std::vector<double>& theta, std::size_t d) {
  // Hermitian H from the off-diagonal parameters, then U = e^{iH}
  ComplexMatrix h(d);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx z(theta[idx], theta[idx + 1]);
      idx += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  const EighResult spec = eigh(h);
  ComplexMatrix u(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const double phi = spec.eigenvalues[k];
        const cplx eig(std::cos(phi), std::sin(phi));
        acc += spec.eigenvectors(i, k) * eig * std::conj(spec.eigenvectors(j, k));
      }
      u(i, j) = acc;
    }
  return u;
}

}  // namespace

Lsi2Estimate estimate_lsi2_constant(const LindbladGenerator& l, int restarts, std::uint64_t seed,
                                    int evals_per_restart) {
  if (!l.is_ergodic())
    throw std::invalid_argument(
        "estimate_lsi2_constant: fixed-point space is not one-dimensional; "
        "the 2-log-Sobolev constant diverges for non-ergodic generators");
  const std::size_t d = l.dim();
  const std::size_t n_theta = d * (d - 1);

  Lsi2Estimate best{-HUGE_VAL, 0.0, 0.0, {}};
  const double u_scales[] = {0.002, 0.01, 0.1, 0.5, 1.5};
  const double t_scales[] = {0.0, 0.3, 1.0, 0.0, 0.5};

  for (int restart = 0; restart < restarts; ++restart) {
    Rng rng(seed + 7919 * static_cast<std::uint64_t>(restart));
    const int variant = restart % 5;
    std::vector<double> u(d), theta(n_theta, 0.0);
    for (auto& x : u) x = u_scales[variant] * rng.normal();
    for (auto& x : theta) x = t_scales[variant] * rng.normal();

    ComplexMatrix basis = unitary_from_params(theta, d);
    double cur = lsi_ratio(l, basis, u);
    double step = 0.2;
    const int iters = std::max(1, evals_per_restart / 8);
    for (int it = 0; it < iters; ++it) {
      std::vector<double> du(d), dt(n_theta);
      for (auto& x : du) x = rng.normal();
      const bool move_basis = n_theta > 0 && rng.uniform() < 0.3;
      for (auto& x : dt) x = move_basis ? rng.normal() : 0.0;

      double best_here = cur;
      std::vector<double> best_u = u, best_theta = theta;
      for (double h : {1.0, 0.3, 0.1}) {
        for (double sign : {1.0, -1.0}) {
          std::vector<double> u2(d), t2(n_theta);
          for (std::size_t i = 0; i < d; ++i) u2[i] = u[i] + sign * h * step * du[i];
          for (std::size_t i = 0; i < n_theta; ++i) t2[i] = theta[i] + sign * h * step * dt[i];
          const ComplexMatrix b2 = move_basis ? unitary_from_params(t2, d) : basis;
          const double r = lsi_ratio(l, b2, u2);
          if (r > best_here) {
            best_here = r;
            best_u = u2;
            best_theta = t2;
          }
        }
      }
      if (best_here > cur) {
        cur = best_here;
        u = best_u;
        if (move_basis) {
          theta = best_theta;
          basis = unitary_from_params(theta, d);
        }
        step = std::min(step * 1.3, 2.0);
      } else {
        step = std::max(step * 0.6, 1e-4);
      }
    }
    if (cur > best.alpha_lower) {
      best.alpha_lower = cur;
      std::vector<double> lam(d);
      double mean_u = 0.0;
      for (double x : u) mean_u += std::clamp(x, -15.0, 15.0);
      mean_u /= static_cast<double>(d);
      for (std::size_t i = 0; i < d; ++i)
        lam[i] = std::exp(std::clamp(u[i], -15.0, 15.0) - mean_u);
      std::sort(lam.begin(), lam.end(), std::greater<double>());
      best.witness_eigenvalues = lam;
      std::vector<double> lam2(d);
      for (std::size_t i = 0; i < d; ++i) lam2[i] = lam[i] * lam[i];
      best.ent = entropy_values(lam2);
      best.dirichlet = cur > 0 ? best.ent / cur : 0.0;
    }
  }
  if (!(best.alpha_lower > 0.0))
    throw std::runtime_error("estimate_lsi2_constant: no admissible witness found");
  return best;
}

}  // namespace qrhc
