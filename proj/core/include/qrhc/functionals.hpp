#pragma once

#include <vector>

#include "qrhc/channels.hpp"

namespace qrhc {

// Ent(f) = tau(f log f) - tau(f) log tau(f) for PSD f with tau(f) > 0,
// with the 0 log 0 = 0 convention on clamped-zero eigenvalues.
double entropy(const HermitianOperator& f);
// Same functional on a spectrum (used by the classical diagonal path).
double entropy_values(const std::vector<double>& values);

// Dirichlet form E_L(f, g) = tau(f L(g)); real for Hermitian inputs.
double dirichlet_form(const LindbladGenerator& l, const HermitianOperator& f,
                      const HermitianOperator& g);

// Transition matrix induced by a unital reversible channel in the eigenbasis
// of g: P_ij = sum_alpha |<i| A_alpha |j>|^2.  Doubly stochastic and
// symmetric; both are validated to 1e-10 at construction.
struct InducedTransitionMatrix {
  std::size_t d;
  std::vector<double> p;  // row-major
  double operator()(std::size_t i, std::size_t j) const { return p[i * d + j]; }
};
InducedTransitionMatrix induced_transition_matrix(const KrausChannel& t,
                                                  const HermitianOperator& g);

// Best ratio Ent(f^2) / E_L(f, f) found by a derivative-free multi-start
// ascent over f = U diag(e^u) U^dagger; a certified lower bound on the
// 2-log-Sobolev constant.  Requires an ergodic generator: the base channel's
// fixed-point space must be one-dimensional (the identity), otherwise the
// constant diverges and the call is rejected.
struct Lsi2Estimate {
  double alpha_lower;
  double ent;        // Ent(f^2) at the best witness
  double dirichlet;  // E(f, f) at the best witness
  std::vector<double> witness_eigenvalues;
};
Lsi2Estimate estimate_lsi2_constant(const LindbladGenerator& l, int restarts = 20,
                                    std::uint64_t seed = 0, int evals_per_restart = 600);

}  // namespace qrhc
