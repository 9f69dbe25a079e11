#pragma once

// Noise-overlap lower bounds: how much mass a depolarized maximally mixed
// state on a subspace keeps under a bounded measurement effect.  The exact
// trace is compared against two closed-form lower bounds; the tighter one
// also reports the exponent pair that attains it in the underlying
// product-form inequality.

#include <cstdint>
#include <string>

#include "qrhc/hermitian.hpp"

namespace qrhc {

// A subspace S of (C^2)^{\otimes n}, a measurement effect 0 <= M <= I, and a
// per-site noise level.  The size parameters s and t are derived on
// construction: dim S = e^{-s^2/2} 2^n and tau(M) = e^{-t^2/2}.
struct SubspaceInstance {
  int n = 0;
  HermitianOperator projector;
  double s = 0.0;
  HermitianOperator m;
  double t = 0.0;
  double gamma = 0.0;

  // Validates idempotency of the projector (eigenvalues within 1e-10 of
  // {0,1}, rank >= 1), the effect spectrum (within [-1e-10, 1+1e-10],
  // tau(M) > 0), and gamma in [0,1]; then fills in s and t.
  SubspaceInstance(int n_qubits, HermitianOperator proj, HermitianOperator effect,
                   double noise);
};

// Exact value tr(M D_gamma^{x n}(P_S / dim S)).
double mixing_lhs(const SubspaceInstance& inst);

struct MixingBound {
  double value = 0.0;
  // The exponent pair maximizing the product-form lower bound
  // |rho_S|_p |M|_q: p attaches to the state, q to the effect.  Defined only
  // when s > 0 and t > 0 (it degenerates to a 0/0 form otherwise); satisfies
  // (1-p)(1-q) = gamma^2 with both exponents in (0,1].
  bool has_exponents = false;
  double p = 0.0;
  double q = 0.0;
};

// exp(-((s^2 + 2 gamma s t + t^2)/(1 - gamma^2) - s^2) / 2) together with the
// optimizing exponent pair.  Requires s, t >= 0 and gamma in [0, 1 - 1e-6].
MixingBound mixing_bound_theorem(double s, double t, double gamma);

// sigma^{(sqrt(alpha) + gamma)^2 / (1 - gamma^2)} for sigma in (0,1],
// alpha >= 0, gamma in [0, 1 - 1e-6].  Equals the previous bound at
// sigma = e^{-s^2/2}, t = s sqrt(alpha).
double mixing_bound_corollary(double sigma, double alpha, double gamma);

// Rank-r projector U P0 U* with a pseudorandom unitary U.
HermitianOperator random_projector(int n_qubits, std::size_t rank, std::uint64_t seed);

// Random effect with tau(M) equal to tau_target exactly: a random positive
// operator is clipped to [0, I] and blended with a multiple of the identity,
// M = beta R + (1 - beta) c I, choosing beta and c to hit the target while
// keeping the spectrum inside [0, 1].
HermitianOperator random_measurement(int n_qubits, double tau_target, std::uint64_t seed);

// lambda (I - P): an effect supported entirely outside the subspace.
HermitianOperator orthogonal_measurement(const HermitianOperator& projector, double lambda);

std::string subspace_instance_to_json(const SubspaceInstance& inst, int indent = -1);
SubspaceInstance subspace_instance_from_json(const std::string& text);

}  // namespace qrhc
