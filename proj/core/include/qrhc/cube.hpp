#pragma once

#include <string>
#include <vector>

#include "qrhc/hermitian.hpp"
#include "qrhc/pnorms.hpp"
#include "qrhc/report.hpp"

namespace qrhc {

// Real function on {0,1}^n stored as a dense table of 2^n values, indexed by
// the integer whose bits are the coordinates (bit n-1 first, matching the
// tensor-leg order used on the operator side).
struct CubeFunction {
  int n = 0;
  std::vector<double> values;

  CubeFunction(int n_bits, std::vector<double> v);
  static CubeFunction constant(int n_bits, double c);

  std::size_t size() const { return values.size(); }
  double mean() const;
};

// (T_gamma f)(x) = E[f(y)] where y flips each bit of x independently with
// probability (1-gamma)/2; n single-bit convolutions
CubeFunction noise_operator(const CubeFunction& f, double gamma);

// ((1/2^n) sum |f|^p)^{1/p}, same conventions and arithmetic as pnorm
double lp_norm(const CubeFunction& f, const PExponent& p);

// entropy and site-sum Dirichlet form of the classical generator
// L = sum_k (id - E_k), E_k the average over bit k
double cube_entropy(const CubeFunction& f);
double cube_dirichlet(const CubeFunction& f, const CubeFunction& g);

// f as the diagonal operator sum_x f(x) |x><x|
HermitianOperator diag_embed(const CubeFunction& f);

enum class HcDirection { Forward, Reverse };

// Forward: || T_gamma f ||_q <= || f ||_p for 1 <= p <= q.
// Reverse: || T_gamma f ||_q >= || f ||_p for q <= p <= 1, f >= 0.
// Exponent ranges are enforced; gamma may take any value in [0,1] so that the
// necessity of the gamma threshold can be demonstrated by failing reports.
VerificationReport classical_hc_check(const CubeFunction& f, const PExponent& p,
                                      const PExponent& q, double gamma, HcDirection direction);

// Probability that all k players report 1 when each sees an independently
// noised copy of a uniform x and applies the majority function (n odd)
double majority_nicd(int n, int k, double gamma);

// Same game for an arbitrary {0,1}-valued (or [0,1]-valued) indicator:
// mean over x of ((T_gamma f)(x))^k
double nicd_success(const CubeFunction& indicator, int k, double gamma);

std::string cube_to_json(const CubeFunction& f);
CubeFunction cube_from_json(const std::string& text);

}  // namespace qrhc
