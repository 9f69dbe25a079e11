#include "qrhc/pnorms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qrhc/config.hpp"

namespace qrhc {

PExponent::PExponent(double v) {
  if (std::isnan(v)) throw std::invalid_argument("PExponent: NaN");
  if (v == 0.0)
    kind_ = Kind::ZeroLimit;
  else if (std::isinf(v))
    kind_ = v > 0 ? Kind::PosInf : Kind::NegInf;
  else {
    kind_ = Kind::Finite;
    v_ = v;
  }
}

PExponent PExponent::zero_limit() { return PExponent(0.0); }
PExponent PExponent::pos_inf() { return PExponent(HUGE_VAL); }
PExponent PExponent::neg_inf() { return PExponent(-HUGE_VAL); }

double PExponent::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("PExponent::value on special state " + str());
  return v_;
}

double PExponent::as_real() const {
  switch (kind_) {
    case Kind::Finite: return v_;
    case Kind::ZeroLimit: return 0.0;
    case Kind::PosInf: return HUGE_VAL;
    case Kind::NegInf: return -HUGE_VAL;
  }
  return 0.0;
}

std::string PExponent::str() const {
  switch (kind_) {
    case Kind::ZeroLimit: return "0(limit)";
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v_);
  return buf;
}

PExponent holder_conjugate(const PExponent& p) {
  if (p.is_zero_limit())
    throw std::domain_error("holder_conjugate undefined for the zero-limit exponent");
  if (p.is_pos_inf() || p.is_neg_inf()) return PExponent(1.0);
  const double v = p.value();
  if (v == 1.0) return PExponent::pos_inf();
  return PExponent(v / (v - 1.0));
}

namespace {

enum class ValueClass { Indefinite, Psd, Pd };

ValueClass classify_values(const std::vector<double>& v) {
  double lo = HUGE_VAL, scale = 0.0;
  for (double x : v) {
    lo = std::min(lo, x);
    scale = std::max(scale, std::abs(x));
  }
  if (lo > eps_pd * scale && lo > 0.0) return ValueClass::Pd;
  if (lo >= -eps_pd * scale) return ValueClass::Psd;
  return ValueClass::Indefinite;
}

// log-domain evaluation of (mean of v^p)^{1/p} over strictly positive v;
// zeros must already be removed and accounted for in total_count
double log_domain_mean_power(const std::vector<double>& positive, std::size_t total_count,
                             double p) {
  double m = -HUGE_VAL;
  for (double x : positive) m = std::max(m, p * std::log(x));
  double s = 0.0;
  for (double x : positive) s += std::exp(p * std::log(x) - m);
  const double log_mean = m + std::log(s) - std::log(static_cast<double>(total_count));
  return std::exp(log_mean / p);
}

}  // namespace

double pnorm_values(std::vector<double> values, const PExponent& p) {
  if (values.empty()) throw std::invalid_argument("pnorm: empty spectrum");
  std::sort(values.begin(), values.end(), std::greater<double>());
  const std::size_t d = values.size();
  const ValueClass cls = classify_values(values);

  const bool needs_pd = p.is_neg_inf() || p.is_zero_limit() || (p.is_finite() && p.value() < 0.0);
  const bool needs_psd = p.is_finite() && p.value() > 0.0 && p.value() < 1.0;
  if (needs_pd && cls != ValueClass::Pd)
    throw std::domain_error("pnorm: exponent " + p.str() + " needs a positive definite operator");
  if (needs_psd && cls == ValueClass::Indefinite)
    throw std::domain_error("pnorm: exponent " + p.str() +
                            " needs a positive semidefinite operator");

  if (p.is_pos_inf()) {
    double m = 0.0;
    for (double x : values) m = std::max(m, std::abs(x));
    return m;
  }
  if (p.is_neg_inf()) return values.back();
  if (p.is_zero_limit()) {
    double acc = 0.0;
    for (double x : values) acc += std::log(x);
    return std::exp(acc / static_cast<double>(d));
  }

  const double pv = p.value();
  std::vector<double> positive;
  positive.reserve(d);
  if (pv >= 1.0) {
    for (double x : values)
      if (x != 0.0) positive.push_back(std::abs(x));
  } else if (pv > 0.0) {
    // PSD-classified: clamp the eps_pd band to zero, keep the rest
    double scale = 0.0;
    for (double x : values) scale = std::max(scale, std::abs(x));
    for (double x : values)
      if (x > eps_pd * scale) positive.push_back(x);
  } else {
    positive = values;  // PD, all strictly positive
  }
  if (positive.empty()) return 0.0;
  return log_domain_mean_power(positive, d, pv);
}

double pnorm(const HermitianOperator& f, const PExponent& p) {
  return pnorm_values(f.spectrum().eigenvalues, p);
}

}  // namespace qrhc
