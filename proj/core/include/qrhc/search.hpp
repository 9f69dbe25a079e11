#pragma once

// Adversarial slack search: minimize the gap of a noise-operator norm
// inequality over candidate operators, at parameters inside or beyond the
// admissible region.  Inside the region a negative minimum beyond tolerance
// is impossible, so finding one throws; beyond the region the negative
// witnesses map the sharpness of the threshold.

#include <cstdint>
#include <string>
#include <vector>

#include "qrhc/hermitian.hpp"
#include "qrhc/pnorms.hpp"

namespace qrhc {

struct SearchSpec {
  std::string inequality_id;  // "reverse-hc" or "forward-hc"
  int n_qubits = 1;
  PExponent p{1.0};
  PExponent q{1.0};
  double gamma = 0.0;
};

struct SearchOutcome {
  double slack = 0.0;
  HermitianOperator witness{ComplexMatrix(1)};
  bool inside_region = false;
  std::size_t evaluations = 0;
};

// Raw slack of the candidate, with no admissibility gate on gamma or the
// exponent order: reverse-hc evaluates |D(f)|_q - |f|_p, forward-hc its
// mirror.  This is the replay evaluator: a reported witness reproduces the
// reported slack bit for bit.
double hc_search_slack(const SearchSpec& spec, const HermitianOperator& f);

// Whether the fixed parameters satisfy the inequality's hypotheses
// (exponent ordering and the gamma threshold, with 1e-12 slop).
bool hc_inside_region(const SearchSpec& spec);

// Multi-start derivative-free descent over f = U diag(lambda) U^dagger,
// with eigenvalues log-parameterized (reverse) or free (forward) and the
// candidate normalized to |f|_p = 1.  Diagonal candidates are searched
// first; a later phase moves the basis.  Deterministic in (spec, budget,
// seed).  Throws std::runtime_error if parameters inside the region yield a
// negative minimum beyond tolerance: that would falsify the inequality.
SearchOutcome minimize_slack(const SearchSpec& spec, std::size_t budget, std::uint64_t seed);

struct SharpnessPoint {
  double gamma = 0.0;
  double slack = 0.0;
  bool inside_region = false;
};

// minimize_slack on each gamma of the grid; expected signature: nonnegative
// minima up to the threshold, strictly negative ones sufficiently beyond it.
std::vector<SharpnessPoint> sharpness_profile(const SearchSpec& base,
                                              const std::vector<double>& gamma_grid,
                                              std::size_t budget_per_point,
                                              std::uint64_t seed);

}  // namespace qrhc
