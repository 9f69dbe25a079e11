#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qrhc/hermitian.hpp"

namespace qrhc {

// Completely positive trace-preserving map given by Kraus operators.
// Completeness sum A^dagger A = I is validated at construction.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> ops);

  std::size_t dim() const { return d_; }
  bool is_unital() const { return unital_; }
  const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }

  ComplexMatrix apply(const ComplexMatrix& f) const;
  HermitianOperator apply(const HermitianOperator& f) const;

 private:
  std::vector<ComplexMatrix> ops_;
  std::size_t d_;
  bool unital_;
};

// n-fold tensor power of the single-qubit depolarizing channel
// D_gamma(f) = (1 - gamma) (tr f) I/2 + gamma f.
struct DepolarizingFamily {
  int n;
  double gamma;
  DepolarizingFamily(int n_qubits, double g);
  std::size_t dim() const { return std::size_t{1} << n; }
};

// Apply D_gamma^{(x) n} by sweeping the single-site map across the qubits.
ComplexMatrix depolarize_apply(int n, double gamma, const ComplexMatrix& f);
HermitianOperator depolarize_apply(const DepolarizingFamily& fam, const HermitianOperator& f);

// Kraus form of the same channel: the 4^n tensor products of
// sqrt((1+3g)/4) I, sqrt((1-g)/4) sigma_x, sigma_y, sigma_z per site.
KrausChannel depolarizing_kraus(int n, double gamma);

// Superoperator matrix in the column-stacking convention:
// vec(T(X)) = [sum conj(A) (x) A] vec(X).
ComplexMatrix superoperator(const KrausChannel& t);

struct ReversibilityReport {
  bool reversible;
  double max_deviation;   // worst |tau(f T(g)) - tau(T(f) g)| over the trials
  double superop_defect;  // hermiticity defect of the superoperator matrix
};

// Self-adjointness with respect to tau(f g): randomized trials plus the
// equivalent criterion that the superoperator matrix is Hermitian.
ReversibilityReport check_reversible(const KrausChannel& t, int trials, std::uint64_t seed,
                                     double tol = 1e-12);

struct PrimitivityReport {
  bool primitive;
  int fixed_point_multiplicity;       // superoperator eigenvalues within eps of 1
  std::vector<double> peripheral;     // eigenvalues with |mu| >= 1 - eps
  double second_largest_modulus;      // largest modulus below the peripheral band
};

// Peripheral-spectrum test on the superoperator.  Supported for reversible
// channels (Hermitian superoperator, covering every semigroup in scope);
// a non-reversible input is rejected as std::invalid_argument.
PrimitivityReport check_primitive(const KrausChannel& t, double eps = 1e-8);

// Generator L of a quantum Markov semigroup T_t = e^{-tL}, in one of the two
// unital reversible constructions used here:
//   - the n-qubit depolarizing site sum L = sum_k (id - twirl_k), whose
//     semigroup is D_{e^{-t}}^{(x) n}
//   - L = c0 (id - T) for a unital reversible channel T, whose semigroup is
//     evaluated through the superoperator exponential
class LindbladGenerator {
 public:
  enum class Kind { DepolarizingSiteSum, FromChannel };

  static LindbladGenerator depolarizing_site_sum(int n_qubits);
  static LindbladGenerator from_channel(KrausChannel t, double c0 = 1.0);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  double c0() const { return c0_; }
  int qubits() const { return n_; }  // DepolarizingSiteSum only
  const KrausChannel& base_channel() const;

  HermitianOperator apply(const HermitianOperator& f) const;           // L(f)
  HermitianOperator semigroup(double t, const HermitianOperator& f) const;  // e^{-tL}(f)

  // ergodicity of the semigroup (one-dimensional fixed-point space); site
  // sums qualify by construction, channel-derived generators are checked
  // once and the answer cached
  bool is_ergodic() const;
  // full primitivity of the base channel (trivial peripheral spectrum)
  bool is_primitive() const;

 private:
  LindbladGenerator() = default;
  Kind kind_ = Kind::DepolarizingSiteSum;
  int n_ = 0;
  double c0_ = 1.0;
  std::size_t dim_ = 0;
  std::optional<KrausChannel> base_;
  std::shared_ptr<const ComplexMatrix> superop_;  // of the base channel
  mutable std::optional<PrimitivityReport> prim_;
};

// Random channel families for tests and campaigns (deterministic in seed).
// Mixture of Pauli strings with random weights: unital and reversible.
KrausChannel random_pauli_mixture(int n_qubits, std::uint64_t seed);
// Mixture of Haar-ish unitaries: unital, generically not reversible.
KrausChannel random_unitary_mixture(std::size_t d, int terms, std::uint64_t seed);

// JSON wire format:
//   {"type":"depolarizing","n":2,"gamma":0.5}
//   {"type":"kraus","dim":2,"ops":[[[re,im],...d*d row-major...],...]}
std::string to_json(const DepolarizingFamily& fam);
std::string to_json(const KrausChannel& t);
struct ParsedChannel {
  std::optional<DepolarizingFamily> depolarizing;
  std::optional<KrausChannel> kraus;
};
ParsedChannel channel_from_json(const std::string& text);

}  // namespace qrhc
