#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrhc/complex_matrix.hpp"
#include "qrhc/rng.hpp"

namespace qrhc {

// Thrown when an iterative numerical routine fails to reach its target.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

enum class PositivityClass { Indefinite, PositiveSemiDefinite, PositiveDefinite };

struct EighResult {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, matching order
};

// Full spectral decomposition of a Hermitian matrix by cyclic Jacobi with
// complex rotations.  Converges when the off-diagonal Frobenius mass drops
// below 1e-14 * ||A||_F; throws convergence_error after 100 sweeps.
EighResult eigh(const ComplexMatrix& a);

// Hermitian matrix with a lazily computed, cached spectral decomposition.
// The cache is written once; all users afterwards share it.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m, double hermiticity_tol = 1e-12);

  std::size_t dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }
  const EighResult& spectrum() const;

  double lambda_min() const { return spectrum().eigenvalues.back(); }
  double lambda_max() const { return spectrum().eigenvalues.front(); }

 private:
  ComplexMatrix m_;
  mutable std::shared_ptr<const EighResult> spec_;
};

// Classify against the relative threshold eps_pd (see config.hpp).
PositivityClass classify(const HermitianOperator& f);

// Spectral-function calculus: f = U diag(l) U^dagger -> U diag(phi(l)) U^dagger.
// For PSD-classified inputs, eigenvalues within the eps_pd band are clamped to
// zero before phi is applied.  A non-finite phi(l_i) raises std::domain_error
// naming the offending eigenvalue.
HermitianOperator mat_fun(const HermitianOperator& f, const std::function<double(double)>& phi,
                          const std::string& phi_name = "phi");

// Spectral power f^a via mat_fun, with the conventions 0^0 = 1 and 0^a = 0
// for a > 0; a <= 0 on a clamped-zero eigenvalue is a domain error.
HermitianOperator mat_pow(const HermitianOperator& f, double a);

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

// Normalized trace tau = tr/d.
double ntrace(const HermitianOperator& f);
double ntrace(const ComplexMatrix& f);

// Normalized Hilbert-Schmidt inner product tau(f^dagger g); real for
// Hermitian arguments, and this overload asserts so.
double hs_inner(const HermitianOperator& f, const HermitianOperator& g);

// tau(f g) without Hermiticity bookkeeping on the product.
double ntrace_product(const ComplexMatrix& f, const ComplexMatrix& g);

// Gram matrix G^dagger G of an i.i.d. CN(0,1) square matrix (Wishart).
// target = PositiveDefinite additionally shifts by 1e-3 * lambda_max * I.
// Deterministic in (d, seed, target).
HermitianOperator random_psd(std::size_t d, std::uint64_t seed, PositivityClass target);

// GUE-style Hermitian matrix with CN(0,1) off-diagonal entries.
HermitianOperator random_hermitian(std::size_t d, Rng& rng);

// Haar-ish unitary: eigenvector matrix of a random Hermitian matrix times
// random phases.
ComplexMatrix random_unitary(std::size_t d, Rng& rng);

// Diagonal matrix from real entries.
HermitianOperator diag_operator(const std::vector<double>& entries);

}  // namespace qrhc
