#include "qrhc/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qrhc/config.hpp"

namespace qrhc {

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < d_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius() const {
  double s = 0.0;
  for (const cplx& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      if (i != j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = i; j < d_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.d_ != d_) throw std::invalid_argument("matrix dimension mismatch in +");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.d_ != d_) throw std::invalid_argument("matrix dimension mismatch in -");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx c) {
  for (cplx& z : a_) z *= c;
  return *this;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const {
  if (v.size() != d_) throw std::invalid_argument("vector length mismatch in apply");
  std::vector<cplx> out(d_, 0.0);
  for (std::size_t i = 0; i < d_; ++i) {
    cplx acc = 0.0;
    const cplx* row = &a_[i * d_];
    for (std::size_t j = 0; j < d_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t d = a.dim();
  if (b.dim() != d) throw std::invalid_argument("matrix dimension mismatch in *");
  ComplexMatrix c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < d; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  if (da != 0 && db > max_dim() / da)
    throw std::invalid_argument("tensor product dimension " + std::to_string(da) + "*" +
                                std::to_string(db) + " exceeds the configured cap " +
                                std::to_string(max_dim()));
  ComplexMatrix c(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0)) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) c(i * db + k, j * db + l) = aij * b(k, l);
    }
  return c;
}

std::vector<cplx> vec(const ComplexMatrix& a) {
  const std::size_t d = a.dim();
  std::vector<cplx> v(d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) v[j * d + i] = a(i, j);
  return v;
}

ComplexMatrix unvec(const std::vector<cplx>& v, std::size_t d) {
  if (v.size() != d * d) throw std::invalid_argument("unvec: length is not d^2");
  ComplexMatrix a(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) a(i, j) = v[j * d + i];
  return a;
}

ComplexMatrix expm(const ComplexMatrix& a) {
  const std::size_t d = a.dim();
  // scale so the 1-ish norm of the scaled matrix is below 1/2
  double norm = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) norm = std::max(norm, std::abs(a(i, j)) * double(d));
  int s = 0;
  while (norm > 0.5 && s < 60) {
    norm *= 0.5;
    ++s;
  }
  ComplexMatrix x = a;
  x *= cplx(std::ldexp(1.0, -s));

  ComplexMatrix result = ComplexMatrix::identity(d);
  ComplexMatrix term = ComplexMatrix::identity(d);
  for (int k = 1; k <= 40; ++k) {
    term = term * x;
    term *= cplx(1.0 / k);
    result += term;
    if (term.max_abs() < 1e-18 * std::max(1.0, result.max_abs())) break;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

}  // namespace qrhc
