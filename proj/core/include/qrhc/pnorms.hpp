#pragma once

#include <string>

#include "qrhc/hermitian.hpp"

namespace qrhc {

// Norm exponent over the extended reals.  Exactly one state holds:
// a finite nonzero value, the p -> 0 limit, +infinity, or -infinity.
// Constructing from 0.0 or +/-inf selects the matching special state.
class PExponent {
 public:
  PExponent(double v);  // NOLINT: implicit by design, exponents read like numbers
  static PExponent zero_limit();
  static PExponent pos_inf();
  static PExponent neg_inf();

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_zero_limit() const { return kind_ == Kind::ZeroLimit; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // finite value; throws std::logic_error for the special states
  double value() const;

  // embedding used for ordering comparisons: zero-limit -> 0, infinities ->
  // +/-HUGE_VAL.  The norm is monotone in the exponent under this order.
  double as_real() const;

  std::string str() const;

  friend bool operator==(const PExponent& a, const PExponent& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.v_ == b.v_);
  }
  friend bool operator<=(const PExponent& a, const PExponent& b) {
    return a.as_real() <= b.as_real();
  }
  friend bool operator<(const PExponent& a, const PExponent& b) { return a.as_real() < b.as_real(); }

 private:
  enum class Kind { Finite, ZeroLimit, PosInf, NegInf };
  Kind kind_;
  double v_ = 0.0;
};

// Hoelder conjugate: 1/p + 1/p' = 1.  p = 1 -> +inf, p = +/-inf -> 1.
// Undefined for the zero limit (throws std::domain_error).
PExponent holder_conjugate(const PExponent& p);

// Normalized Schatten p-functional (tau(|f|^p))^{1/p} over the extended
// exponent range:
//   p >= 1 finite      : spectral absolute values, any Hermitian f
//   0 < p < 1          : f must classify PSD; eps_pd-band eigenvalues -> 0
//   p -> 0 limit       : exp(tau(log f)), f must classify PD
//   p < 0 finite       : f must classify PD
//   p = +inf           : largest |eigenvalue|
//   p = -inf           : smallest eigenvalue, f must classify PD
// Computed in the log domain so extreme exponents (|p| ~ 1e3) stay stable.
double pnorm(const HermitianOperator& f, const PExponent& p);

// Same functional on a plain list of eigenvalues (sorted internally).
double pnorm_values(std::vector<double> values, const PExponent& p);

}  // namespace qrhc
