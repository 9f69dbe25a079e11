#pragma once

// Non-interactive correlation distillation on qubits: k players share copies
// of a basis state drawn uniformly from an orthonormal basis, each copy
// passes through per-site depolarizing noise, and every player applies the
// same balanced two-outcome measurement {M, I - M}.  The game succeeds when
// all outcomes agree.  This module computes the success probability exactly,
// evaluates the closed-form bound ingredients, and replays the chain of
// inequalities that caps the advantage of entangled bases.

#include <cstdint>
#include <string>
#include <vector>

#include "qrhc/hermitian.hpp"
#include "qrhc/report.hpp"

namespace qrhc {

struct NicdInstance {
  int n = 0;
  ComplexMatrix basis;  // unitary; columns are the shared basis states
  HermitianOperator m;  // effect with tau(M) = 1/2
  double gamma = 0.0;
  std::uint64_t k = 1;

  // Validates: 1 <= n <= 10, basis unitary to 1e-10, effect spectrum inside
  // [-1e-10, 1+1e-10] with |tau(M) - 1/2| <= 1e-10, gamma in [0,1], k >= 1.
  NicdInstance(int n_qubits, ComplexMatrix basis_cols, HermitianOperator effect,
               double noise, std::uint64_t players);
};

struct NicdResult {
  double p_all_m = 0.0;      // every player sees the M outcome
  double p_all_not_m = 0.0;  // every player sees the complement outcome
  std::vector<double> per_state;  // tr(M D_gamma^{x n}(|psi><psi|)) per column
};

// Exact evaluation: no sampling, integer powers of per-state probabilities.
NicdResult success_probability(const NicdInstance& inst);

struct NicdBound {
  double term_a = 0.0;    // delta^{1/k}
  double term_b = 0.0;    // delta^{(1/sqrt(ln 1/delta) + gamma)^2/(1-gamma^2)}
  double combined = 0.0;  // term_a + term_b
  // Exact three-factor split of term_b:
  //   e^{-1/(1-g^2)} * e^{-2 g sqrt(ln 1/delta)/(1-g^2)} * delta^{g^2/(1-g^2)}
  double factor_flat = 0.0;
  double factor_cross = 0.0;
  double factor_decay = 0.0;
};

// Requires delta in (0,1), gamma in [0,1), k >= 1.
NicdBound nicd_bound_rhs(double delta, double gamma, std::uint64_t k);

// Replays the contradiction chain on a concrete instance: with
// S = span{ basis columns whose success power is >= delta } and
// sigma = dim S / 2^n,
//   (markov)  sigma >= delta, valid whenever p_all_m >= 2 delta;
//   (floor)   tr[(I-M) D(rho_S)] <= 1 - delta^{1/k};
//   (ceiling) tr[(I-M) D(rho_S)] >= sigma^{(sqrt(a)+g)^2/(1-g^2)} with
//             a = 1/log2(1/sigma).
// The report folds the three slacks (parameters carry each one); the ceiling
// check is skipped with a flag when sigma = 1 or gamma is too close to 1.
// Throws std::invalid_argument when p_all_m < 2 delta (chain inapplicable).
VerificationReport verify_nicd_contradiction(const NicdInstance& inst, double delta);

enum class BasisFamily { Product, Ghz, Haar };
enum class EffectFamily { MajorityDiagonal, HalfProjector, RandomBalanced };

// Basis constructions.  Product is the computational basis.  Ghz conjugates
// it by a Hadamard on the first qubit followed by the chain of CNOTs
// (1,2), (2,3), ..., (n-1,n).  Haar draws a pseudorandom unitary.
ComplexMatrix nicd_basis(BasisFamily family, int n_qubits, std::uint64_t seed);

// Effect constructions, all with tau(M) = 1/2.  MajorityDiagonal is diagonal
// in the computational basis (majority bit vote, ties weighted 1/2).
// HalfProjector projects onto the first half of the given basis columns.
// RandomBalanced blends a clipped random positive operator with the identity.
HermitianOperator nicd_effect(EffectFamily family, int n_qubits, const ComplexMatrix& basis,
                              std::uint64_t seed);

struct SweepRow {
  std::string basis_id;
  std::string m_id;
  int n = 0;
  std::uint64_t k = 1;
  double gamma = 0.0;
  double p_all_m = 0.0;
  double p_all_not_m = 0.0;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // player counts 1, 2, 4, ... up to k
  // (e^{c sqrt(ln k)}/k)^{1/gamma^2 - 1} at the caller's c, for comparison
  // against the final row; the constant is not pinned down by theory.
  double envelope = 0.0;
  double envelope_c = 0.0;
};

SweepTable entangled_basis_sweep(int n_qubits, std::uint64_t k, double gamma,
                                 BasisFamily basis_family, EffectFamily effect_family,
                                 std::uint64_t seed, double envelope_c);

// CSV columns: basis_id,M_id,n,k,gamma,p_all_M,p_all_notM
std::string sweep_table_to_csv(const SweepTable& table);
JsonValue sweep_table_to_json(const SweepTable& table);

}  // namespace qrhc
