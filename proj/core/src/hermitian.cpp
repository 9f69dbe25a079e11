#include "qrhc/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrhc/config.hpp"

namespace qrhc {

namespace {

void symmetrize(ComplexMatrix& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = cplx(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
}

}  // namespace

EighResult eigh(const ComplexMatrix& input) {
  const std::size_t d = input.dim();
  if (d == 0) throw std::invalid_argument("eigh: empty matrix");

  ComplexMatrix a = input;
  symmetrize(a);
  ComplexMatrix v = ComplexMatrix::identity(d);

  const double norm_f = a.frobenius();
  const double target = 1e-14 * norm_f;

  if (d > 1 && norm_f > 0.0) {
    bool converged = false;
    double off = a.off_diagonal_norm();
    for (int sweep = 0; sweep < 100; ++sweep) {
      if (off <= target) {
        converged = true;
        break;
      }
      for (std::size_t p = 0; p + 1 < d; ++p) {
        for (std::size_t q = p + 1; q < d; ++q) {
          const cplx apq = a(p, q);
          const double r = std::abs(apq);
          if (r <= 1e-300) continue;
          const cplx phase = apq / r;  // e^{i phi}
          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double tau = (aqq - app) / (2.0 * r);
          // smaller root of t^2 + 2 tau t - 1 = 0
          const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const cplx phase_conj = std::conj(phase);
          // A <- U^dagger A U with U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
          for (std::size_t k = 0; k < d; ++k) {
            const cplx akp = a(k, p);
            const cplx akq = a(k, q);
            a(k, p) = c * akp - s * phase_conj * akq;
            a(k, q) = s * akp + c * phase_conj * akq;
          }
          for (std::size_t k = 0; k < d; ++k) {
            const cplx apk = a(p, k);
            const cplx aqk = a(q, k);
            a(p, k) = c * apk - s * phase * aqk;
            a(q, k) = s * apk + c * phase * aqk;
          }
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = cplx(a(p, p).real(), 0.0);
          a(q, q) = cplx(a(q, q).real(), 0.0);
          for (std::size_t k = 0; k < d; ++k) {
            const cplx vkp = v(k, p);
            const cplx vkq = v(k, q);
            v(k, p) = c * vkp - s * phase_conj * vkq;
            v(k, q) = s * vkp + c * phase_conj * vkq;
          }
        }
      }
      off = a.off_diagonal_norm();
    }
    if (!converged && off > target)
      throw convergence_error("eigh: Jacobi sweeps exhausted, off-diagonal residual " +
                                  std::to_string(off),
                              off);
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EighResult res;
  res.eigenvalues.resize(d);
  res.eigenvectors = ComplexMatrix(d);
  for (std::size_t col = 0; col < d; ++col) {
    res.eigenvalues[col] = a(order[col], order[col]).real();
    for (std::size_t row = 0; row < d; ++row) res.eigenvectors(row, col) = v(row, order[col]);
  }
  return res;
}

HermitianOperator::HermitianOperator(ComplexMatrix m, double hermiticity_tol) : m_(std::move(m)) {
  if (m_.dim() == 0) throw std::invalid_argument("HermitianOperator: empty matrix");
  if (!m_.all_finite()) throw std::invalid_argument("HermitianOperator: non-finite entry");
  const double defect = m_.hermiticity_defect();
  const double scale = std::max(1.0, m_.max_abs());
  if (defect > hermiticity_tol * scale)
    throw std::invalid_argument("HermitianOperator: hermiticity defect " + std::to_string(defect) +
                                " exceeds tolerance");
  symmetrize(m_);
}

const EighResult& HermitianOperator::spectrum() const {
  if (!spec_) spec_ = std::make_shared<const EighResult>(eigh(m_));
  return *spec_;
}

PositivityClass classify(const HermitianOperator& f) {
  const auto& ev = f.spectrum().eigenvalues;
  const double lo = ev.back();
  double scale = 0.0;
  for (double l : ev) scale = std::max(scale, std::abs(l));
  if (lo > eps_pd * scale && lo > 0.0) return PositivityClass::PositiveDefinite;
  if (lo >= -eps_pd * scale) return PositivityClass::PositiveSemiDefinite;
  return PositivityClass::Indefinite;
}

namespace {

// Eigenvalues as used by spectral functions: PSD-classified inputs get the
// eps_pd band clamped to zero; indefinite inputs pass through unchanged.
std::vector<double> effective_eigenvalues(const HermitianOperator& f) {
  std::vector<double> ev = f.spectrum().eigenvalues;
  double scale = 0.0;
  for (double l : ev) scale = std::max(scale, std::abs(l));
  const double lo = ev.back();
  if (lo >= -eps_pd * scale) {  // PSD or PD
    for (double& l : ev)
      if (l <= eps_pd * scale) l = 0.0;
  }
  return ev;
}

HermitianOperator rebuild(const EighResult& spec, const std::vector<double>& values) {
  const std::size_t d = spec.eigenvectors.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        acc += spec.eigenvectors(i, k) * values[k] * std::conj(spec.eigenvectors(j, k));
      out(i, j) = acc;
    }
  // roundoff can leave a ~1e-16 hermiticity defect; the ctor symmetrizes
  return HermitianOperator(std::move(out), 1e-10);
}

}  // namespace

HermitianOperator mat_fun(const HermitianOperator& f, const std::function<double(double)>& phi,
                          const std::string& phi_name) {
  const auto ev = effective_eigenvalues(f);
  std::vector<double> mapped(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    mapped[i] = phi(ev[i]);
    if (!std::isfinite(mapped[i]))
      throw std::domain_error(phi_name + " undefined at eigenvalue " + std::to_string(ev[i]) +
                              " (index " + std::to_string(i) + ")");
  }
  return rebuild(f.spectrum(), mapped);
}

HermitianOperator mat_pow(const HermitianOperator& f, double a) {
  return mat_fun(
      f,
      [a](double l) {
        if (l == 0.0 && a == 0.0) return 1.0;
        if (l == 0.0 && a > 0.0) return 0.0;
        return std::pow(l, a);
      },
      "power " + std::to_string(a));
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

double ntrace(const ComplexMatrix& f) { return f.trace().real() / static_cast<double>(f.dim()); }
double ntrace(const HermitianOperator& f) { return ntrace(f.matrix()); }

double ntrace_product(const ComplexMatrix& f, const ComplexMatrix& g) {
  const std::size_t d = f.dim();
  if (g.dim() != d) throw std::invalid_argument("ntrace_product: dimension mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) acc += f(i, k) * g(k, i);
  return acc.real() / static_cast<double>(d);
}

double hs_inner(const HermitianOperator& f, const HermitianOperator& g) {
  // f^dagger = f, so tau(f^dagger g) = tau(f g)
  return ntrace_product(f.matrix(), g.matrix());
}

HermitianOperator random_psd(std::size_t d, std::uint64_t seed, PositivityClass target) {
  if (target == PositivityClass::Indefinite)
    throw std::invalid_argument("random_psd: target must be PSD or PD");
  Rng rng(seed);
  ComplexMatrix g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix gram = g.adjoint() * g;
  HermitianOperator out(std::move(gram), 1e-10);
  if (target == PositivityClass::PositiveDefinite) {
    ComplexMatrix shifted = out.matrix();
    const double shift = 1e-3 * std::max(out.lambda_max(), 0.0) + 1e-12;
    for (std::size_t i = 0; i < d; ++i) shifted(i, i) += shift;
    return HermitianOperator(std::move(shifted), 1e-10);
  }
  return out;
}

HermitianOperator random_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix h(d);
  for (std::size_t i = 0; i < d; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx z = rng.complex_normal();
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return HermitianOperator(std::move(h));
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  const HermitianOperator h = random_hermitian(d, rng);
  ComplexMatrix u = h.spectrum().eigenvectors;
  for (std::size_t j = 0; j < d; ++j) {
    const double theta = rng.uniform(0.0, 6.283185307179586);
    const cplx phase(std::cos(theta), std::sin(theta));
    for (std::size_t i = 0; i < d; ++i) u(i, j) *= phase;
  }
  return u;
}

HermitianOperator diag_operator(const std::vector<double>& entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return HermitianOperator(std::move(m));
}

}  // namespace qrhc
