#include "qrhc/cube.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "qrhc/functionals.hpp"
#include "qrhc/mathutil.hpp"

namespace qrhc {

CubeFunction::CubeFunction(int n_bits, std::vector<double> v) : n(n_bits), values(std::move(v)) {
  if (n < 1 || n > 15) throw std::invalid_argument("CubeFunction: bit count out of [1,15]");
  if (values.size() != (std::size_t{1} << n))
    throw std::invalid_argument("CubeFunction: table size must be 2^n");
  for (double x : values)
    if (!std::isfinite(x)) throw std::invalid_argument("CubeFunction: non-finite value");
}

CubeFunction CubeFunction::constant(int n_bits, double c) {
  return CubeFunction(n_bits, std::vector<double>(std::size_t{1} << n_bits, c));
}

double CubeFunction::mean() const {
  double acc = 0.0;
  for (double x : values) acc += x;
  return acc / static_cast<double>(values.size());
}

CubeFunction noise_operator(const CubeFunction& f, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("noise_operator: gamma outside [0,1]");
  const double keep = (1.0 + gamma) / 2.0, flip = (1.0 - gamma) / 2.0;
  std::vector<double> v = f.values;
  for (int b = 0; b < f.n; ++b) {
    const std::size_t mask = std::size_t{1} << b;
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (x & mask) continue;
      const double lo = v[x], hi = v[x | mask];
      v[x] = keep * lo + flip * hi;
      v[x | mask] = flip * lo + keep * hi;
    }
  }
  return CubeFunction(f.n, std::move(v));
}

double lp_norm(const CubeFunction& f, const PExponent& p) { return pnorm_values(f.values, p); }

double cube_entropy(const CubeFunction& f) { return entropy_values(f.values); }

double cube_dirichlet(const CubeFunction& f, const CubeFunction& g) {
  if (f.n != g.n) throw std::invalid_argument("cube_dirichlet: bit count mismatch");
  double acc = 0.0;
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    double lg = 0.0;
    for (int b = 0; b < g.n; ++b) lg += (g.values[x] - g.values[x ^ (std::size_t{1} << b)]) / 2.0;
    acc += f.values[x] * lg;
  }
  return acc / static_cast<double>(f.values.size());
}

HermitianOperator diag_embed(const CubeFunction& f) { return diag_operator(f.values); }

VerificationReport classical_hc_check(const CubeFunction& f, const PExponent& p,
                                      const PExponent& q, double gamma, HcDirection direction) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("classical_hc_check: gamma outside [0,1]");
  const bool forward = direction == HcDirection::Forward;
  if (forward) {
    if (!(PExponent(1.0) <= p && p <= q))
      throw std::invalid_argument("classical_hc_check: forward direction needs 1 <= p <= q");
  } else {
    if (!(q <= p && p <= PExponent(1.0)))
      throw std::invalid_argument("classical_hc_check: reverse direction needs q <= p <= 1");
    for (double x : f.values)
      if (x < 0.0)
        throw std::invalid_argument("classical_hc_check: reverse direction needs f >= 0");
  }
  const CubeFunction noisy = noise_operator(f, gamma);
  const double noisy_q = lp_norm(noisy, q);
  const double plain_p = lp_norm(f, p);
  const double lhs = forward ? plain_p : noisy_q;
  const double rhs = forward ? noisy_q : plain_p;
  JsonValue::Object params{{"direction", JsonValue(forward ? "forward" : "reverse")},
                           {"p", JsonValue(p.as_real())},
                           {"q", JsonValue(q.as_real())},
                           {"gamma", JsonValue(gamma)},
                           {"n", JsonValue(f.n)}};
  return make_report(forward ? "classical-forward-hc" : "classical-reverse-hc", std::move(params),
                     lhs, rhs, lhs - rhs);
}

double majority_nicd(int n, int k, double gamma) {
  if (n < 1 || n > 15 || n % 2 == 0)
    throw std::invalid_argument("majority_nicd: n must be odd and in [1,15]");
  if (k < 1) throw std::invalid_argument("majority_nicd: k must be positive");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("majority_nicd: gamma outside [0,1]");
  const double eps = (1.0 - gamma) / 2.0;
  const std::vector<double> choose = binomial_row(n);
  const int need = (n + 1) / 2;

  double acc = 0.0;
  for (int w = 0; w <= n; ++w) {
    // P(majority of the noised input is 1 | input has w ones): a of the w
    // ones flip down, b of the n-w zeros flip up, majority iff w - a + b >= need
    const std::vector<double> ca = binomial_row(w), cb = binomial_row(n - w);
    double p1 = 0.0;
    for (int a = 0; a <= w; ++a) {
      const double pa = ca[a] * std::pow(eps, a) * std::pow(1.0 - eps, w - a);
      for (int b = 0; b <= n - w; ++b) {
        if (w - a + b < need) continue;
        p1 += pa * cb[b] * std::pow(eps, b) * std::pow(1.0 - eps, n - w - b);
      }
    }
    acc += choose[w] * pow_int(p1, static_cast<std::uint64_t>(k));
  }
  return acc / static_cast<double>(std::size_t{1} << n);
}

double nicd_success(const CubeFunction& indicator, int k, double gamma) {
  if (k < 1) throw std::invalid_argument("nicd_success: k must be positive");
  const CubeFunction noisy = noise_operator(indicator, gamma);
  double acc = 0.0;
  for (double x : noisy.values) acc += pow_int(x, static_cast<std::uint64_t>(k));
  return acc / static_cast<double>(noisy.values.size());
}

std::string cube_to_json(const CubeFunction& f) {
  JsonValue arr = JsonValue::array();
  for (double x : f.values) arr.append(x);
  return arr.dump();
}

CubeFunction cube_from_json(const std::string& text) {
  const auto parsed = nlohmann::json::parse(text);
  if (!parsed.is_array()) throw std::invalid_argument("cube_from_json: expected an array");
  std::vector<double> v;
  v.reserve(parsed.size());
  for (const auto& x : parsed) v.push_back(x.get<double>());
  int n = 0;
  while ((std::size_t{1} << n) < v.size() && n < 16) ++n;
  return CubeFunction(n, std::move(v));  // ctor re-validates the size
}

}  // namespace qrhc
