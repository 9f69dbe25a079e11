#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qrhc {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major.  Sized for the small Hilbert-space
// dimensions this library works at; no sparsity, no views.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t d) : d_(d), a_(d * d) {}

  static ComplexMatrix identity(std::size_t d);

  std::size_t dim() const { return d_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius() const;
  double max_abs() const;
  // Frobenius mass of the off-diagonal part
  double off_diagonal_norm() const;
  bool all_finite() const;
  // max entrywise |A - A^dagger|
  double hermiticity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx c);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx c) { return a *= c; }
  friend ComplexMatrix operator*(cplx c, ComplexMatrix a) { return a *= c; }

  std::vector<cplx> apply(const std::vector<cplx>& v) const;

 private:
  std::size_t d_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; checks the configured dimension cap before allocating.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Column-stacking vectorization: vec(A)[j*d + i] = A(i, j), so that
// vec(A X B) = (B^T (x) A) vec(X).
std::vector<cplx> vec(const ComplexMatrix& a);
ComplexMatrix unvec(const std::vector<cplx>& v, std::size_t d);

// Matrix exponential by scaling and squaring with a Taylor series on the
// scaled matrix.  Adequate at the dimensions used here.
ComplexMatrix expm(const ComplexMatrix& a);

}  // namespace qrhc
