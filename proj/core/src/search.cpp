#include "qrhc/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "qrhc/channels.hpp"
#include "qrhc/rng.hpp"
#include "qrhc/verifiers.hpp"

namespace qrhc {

namespace {

// log-eigenvalue clamp for positive candidates: ratio at most e^16, which
// keeps the smallest normalized eigenvalue well above the PSD cutoff band
constexpr double kLogClamp = 8.0;
constexpr double kValClamp = 8.0;
constexpr double kRegionSlop = 1e-12;
// a minimum this far below zero inside the hypothesis region is a numerics
// bug or a falsification, either way fatal; boundary roundoff sits near 1e-13
constexpr double kSoundnessTol = 1e-9;

bool is_reverse(const SearchSpec& spec) {
  if (spec.inequality_id == "reverse-hc") return true;
  if (spec.inequality_id == "forward-hc") return false;
  throw std::invalid_argument("unknown inequality_id '" + spec.inequality_id +
                              "'; registered: reverse-hc, forward-hc");
}

// positive candidates (lambda = e^v) are mandatory whenever some norm in the
// slack needs a positive operator; forward with both exponents >= 1 may roam
// over indefinite ones
bool positive_candidates(const SearchSpec& spec, bool reverse) {
  if (reverse) return true;
  return spec.p.as_real() < 1.0 || spec.q.as_real() < 1.0;
}

ComplexMatrix unitary_from_coeffs(const std::vector<double>& theta, std::size_t d) {
  ComplexMatrix h(d);
  std::size_t idx = 0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r + 1; c < d; ++c) {
      // i * (Hermitian generator); diagonal entries act trivially on
      // diag(lambda) conjugation, so they carry no parameters
      const std::complex<double> z(theta[idx], theta[idx + 1]);
      idx += 2;
      h(r, c) = std::complex<double>(0.0, 1.0) * z;
      h(c, r) = std::complex<double>(0.0, 1.0) * std::conj(z);
    }
  }
  return expm(h);
}

std::optional<HermitianOperator> build_candidate(const SearchSpec& spec, bool positive,
                                                 const std::vector<double>& v,
                                                 const std::vector<double>& theta) {
  const std::size_t d = std::size_t{1} << spec.n_qubits;
  std::vector<double> lam(d);
  for (std::size_t i = 0; i < d; ++i) {
    lam[i] = positive ? std::exp(std::clamp(v[i], -kLogClamp, kLogClamp))
                      : std::clamp(v[i], -kValClamp, kValClamp);
  }
  // normalize |f|_p = 1: the slack is 1-homogeneous, so this fixes the scale
  // without losing any witness
  const double scale = pnorm_values(lam, spec.p);
  if (!std::isfinite(scale) || scale < 1e-12) return std::nullopt;
  for (auto& x : lam) x /= scale;

  bool rotated = false;
  for (double t : theta) rotated = rotated || t != 0.0;
  ComplexMatrix f(d);
  if (!rotated) {
    for (std::size_t i = 0; i < d; ++i) f(i, i) = lam[i];
  } else {
    const ComplexMatrix u = unitary_from_coeffs(theta, d);
    ComplexMatrix scaled = u;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) scaled(r, c) *= lam[c];
    f = scaled * u.adjoint();
  }
  return HermitianOperator(f, 1e-9);
}

struct Tracker {
  double slack = std::numeric_limits<double>::infinity();
  std::optional<HermitianOperator> op;
};

}  // namespace

double hc_search_slack(const SearchSpec& spec, const HermitianOperator& f) {
  const bool reverse = is_reverse(spec);
  const DepolarizingFamily fam(spec.n_qubits, spec.gamma);
  const double noisy = pnorm(depolarize_apply(fam, f), spec.q);
  const double plain = pnorm(f, spec.p);
  return reverse ? noisy - plain : plain - noisy;
}

bool hc_inside_region(const SearchSpec& spec) {
  const bool reverse = is_reverse(spec);
  if (spec.gamma < 0.0 || spec.gamma > 1.0) return false;
  double bound = 0.0;
  if (reverse) {
    if (!(spec.q <= spec.p) || !(spec.p <= PExponent(1.0))) return false;
    bound = reverse_hc_gamma_bound(spec.p, spec.q);
  } else {
    if (!(PExponent(1.0) <= spec.p) || !(spec.p <= spec.q)) return false;
    bound = forward_hc_gamma_bound(spec.p, spec.q);
  }
  return spec.gamma <= bound + kRegionSlop;
}

SearchOutcome minimize_slack(const SearchSpec& spec, std::size_t budget, std::uint64_t seed) {
  const bool reverse = is_reverse(spec);
  if (spec.n_qubits < 1 || spec.n_qubits > 6)
    throw std::invalid_argument("minimize_slack supports 1..6 qubits");
  if (!(spec.gamma >= 0.0) || !(spec.gamma <= 1.0))
    throw std::invalid_argument("gamma must lie in [0, 1]");
  if (budget < 16) throw std::invalid_argument("budget must be at least 16 evaluations");
  const bool positive = positive_candidates(spec, reverse);

  const std::size_t d = std::size_t{1} << spec.n_qubits;
  const std::size_t m_theta = d * (d - 1);
  const double flat = positive ? 0.0 : 1.0;

  Tracker best;
  std::size_t evaluations = 0;

  auto evaluate = [&](const std::vector<double>& v,
                      const std::vector<double>& theta) -> double {
    ++evaluations;
    auto f = build_candidate(spec, positive, v, theta);
    if (!f) return std::numeric_limits<double>::infinity();
    const double s = hc_search_slack(spec, *f);
    if (s < best.slack) {
      best.slack = s;
      best.op = std::move(f);
    }
    return s;
  };

  // coordinate descent with per-coordinate adaptive steps; every probe is
  // gated on the global budget so evaluations never exceeds it
  auto descend = [&](std::vector<double>& v, std::vector<double>& theta, bool move_theta,
                     std::size_t max_evals) {
    const std::size_t ceiling = std::min(budget, evaluations + max_evals);
    auto can_eval = [&] { return evaluations < ceiling; };
    if (!can_eval()) return;
    const std::size_t n_coords = d + (move_theta ? m_theta : 0);
    std::vector<double> step(n_coords, 0.5);
    double current = evaluate(v, theta);
    bool any_live = true;
    while (any_live && can_eval()) {
      any_live = false;
      for (std::size_t c = 0; c < n_coords && can_eval(); ++c) {
        if (step[c] < 1e-5) continue;
        any_live = true;
        double* slot = c < d ? &v[c] : &theta[c - d];
        const double original = *slot;
        *slot = original + step[c];
        double trial = evaluate(v, theta);
        if (trial < current) {
          current = trial;
          step[c] = std::min(step[c] * 1.4, 2.0);
          continue;
        }
        if (!can_eval()) {
          *slot = original;
          break;
        }
        *slot = original - step[c];
        trial = evaluate(v, theta);
        if (trial < current) {
          current = trial;
          step[c] = std::min(step[c] * 1.4, 2.0);
          continue;
        }
        *slot = original;
        step[c] *= 0.55;
      }
    }
  };

  const std::size_t restarts = std::max<std::size_t>(1, std::min<std::size_t>(6, budget / 300));
  const std::size_t per_restart = budget / restarts;
  for (std::size_t r = 0; r < restarts && evaluations < budget; ++r) {
    Rng rng(seed + 7919 * r + 1);
    std::vector<double> v(d, flat);
    if (r == 1) {
      // two-point split: the classical extremizers live on this family
      v[0] = positive ? 0.5 : 1.5;
      for (std::size_t i = 1; i < d; ++i) v[i] = positive ? -0.5 : 0.5;
    } else if (r >= 2) {
      for (auto& x : v) x = flat + 0.8 * rng.normal();
    }
    std::vector<double> theta(m_theta, 0.0);
    const std::size_t cap = std::min(per_restart, budget - evaluations);
    // diagonal phase first: classical extremizers are diagonal
    descend(v, theta, false, std::max<std::size_t>(1, (cap * 45) / 100));
    if (evaluations < budget) descend(v, theta, true, cap - std::min(cap, (cap * 45) / 100));
  }

  if (!best.op) throw std::runtime_error("search produced no evaluable candidate");

  SearchOutcome out;
  out.slack = best.slack;
  out.witness = *best.op;
  out.inside_region = hc_inside_region(spec);
  out.evaluations = evaluations;
  if (out.inside_region && out.slack < -kSoundnessTol) {
    throw std::runtime_error("slack " + std::to_string(out.slack) + " below -1e-9 for " +
                             spec.inequality_id + " inside the hypothesis region (p " +
                             spec.p.str() + ", q " + spec.q.str() + ", gamma " +
                             std::to_string(spec.gamma) + "): falsifies the inequality");
  }
  return out;
}

std::vector<SharpnessPoint> sharpness_profile(const SearchSpec& base,
                                              const std::vector<double>& gamma_grid,
                                              std::size_t budget_per_point, std::uint64_t seed) {
  std::vector<SharpnessPoint> profile;
  profile.reserve(gamma_grid.size());
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
    SearchSpec point = base;
    point.gamma = gamma_grid[i];
    const SearchOutcome out = minimize_slack(point, budget_per_point, seed + 101 * i);
    profile.push_back({point.gamma, out.slack, out.inside_region});
  }
  return profile;
}

}  // namespace qrhc
