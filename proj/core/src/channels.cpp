#include "qrhc/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qrhc/config.hpp"

namespace qrhc {

namespace {

ComplexMatrix pauli(int which) {
  ComplexMatrix m(2);
  switch (which) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;                    // I
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;                    // X
    case 2: m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;  // Y
    default: m(0, 0) = 1.0; m(1, 1) = -1.0; break;                  // Z
  }
  return m;
}

ComplexMatrix pauli_string(int n, std::uint64_t code) {
  ComplexMatrix op = pauli(static_cast<int>(code % 4));
  code /= 4;
  for (int site = 1; site < n; ++site) {
    op = kron(pauli(static_cast<int>(code % 4)), op);
    code /= 4;
  }
  return op;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: no operators");
  d_ = ops_[0].dim();
  if (d_ == 0) throw std::invalid_argument("KrausChannel: empty operators");
  for (const auto& a : ops_)
    if (a.dim() != d_) throw std::invalid_argument("KrausChannel: mixed dimensions");

  ComplexMatrix completeness(d_);
  ComplexMatrix unitality(d_);
  for (const auto& a : ops_) {
    const ComplexMatrix adj = a.adjoint();
    completeness += adj * a;
    unitality += a * adj;
  }
  const ComplexMatrix eye = ComplexMatrix::identity(d_);
  const double tp_defect = (completeness - eye).max_abs();
  if (tp_defect > 1e-10)
    throw std::invalid_argument("KrausChannel: completeness defect " + std::to_string(tp_defect));
  unital_ = (unitality - eye).max_abs() <= 1e-10;
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& f) const {
  if (f.dim() != d_) throw std::invalid_argument("KrausChannel::apply: dimension mismatch");
  ComplexMatrix out(d_);
  for (const auto& a : ops_) out += a * f * a.adjoint();
  return out;
}

HermitianOperator KrausChannel::apply(const HermitianOperator& f) const {
  return HermitianOperator(apply(f.matrix()), 1e-9);
}

DepolarizingFamily::DepolarizingFamily(int n_qubits, double g) : n(n_qubits), gamma(g) {
  if (n < 1) throw std::invalid_argument("DepolarizingFamily: need at least one qubit");
  if (!(g >= 0.0 && g <= 1.0))
    throw std::invalid_argument("DepolarizingFamily: gamma must lie in [0,1]");
  if (n >= 63 || (std::size_t{1} << n) > max_dim())
    throw std::invalid_argument("DepolarizingFamily: 2^n exceeds the configured cap");
}

ComplexMatrix depolarize_apply(int n, double gamma, const ComplexMatrix& f) {
  const std::size_t d = std::size_t{1} << n;
  if (f.dim() != d) throw std::invalid_argument("depolarize_apply: dimension is not 2^n");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("depolarize_apply: gamma must lie in [0,1]");
  ComplexMatrix cur = f;
  for (int site = 0; site < n; ++site) {
    const std::size_t mask = std::size_t{1} << (n - 1 - site);
    ComplexMatrix next(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        cplx v = gamma * cur(i, j);
        if ((i & mask) == (j & mask)) {
          const cplx lo = cur(i & ~mask, j & ~mask);
          const cplx hi = cur(i | mask, j | mask);
          v += (1.0 - gamma) * 0.5 * (lo + hi);
        }
        next(i, j) = v;
      }
    cur = std::move(next);
  }
  return cur;
}

HermitianOperator depolarize_apply(const DepolarizingFamily& fam, const HermitianOperator& f) {
  return HermitianOperator(depolarize_apply(fam.n, fam.gamma, f.matrix()), 1e-10);
}

KrausChannel depolarizing_kraus(int n, double gamma) {
  DepolarizingFamily fam(n, gamma);  // validates ranges
  const double w_id = std::sqrt((1.0 + 3.0 * gamma) / 4.0);
  const double w_pauli = std::sqrt((1.0 - gamma) / 4.0);
  std::vector<ComplexMatrix> site(4);
  for (int a = 0; a < 4; ++a) {
    site[a] = pauli(a);
    site[a] *= cplx(a == 0 ? w_id : w_pauli);
  }
  std::vector<ComplexMatrix> ops;
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  ops.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    ComplexMatrix op = site[c % 4];
    c /= 4;
    for (int s = 1; s < n; ++s) {
      op = kron(site[c % 4], op);
      c /= 4;
    }
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

ComplexMatrix superoperator(const KrausChannel& t) {
  const std::size_t d = t.dim();
  if (d > max_dim() / d)
    throw std::invalid_argument("superoperator: d^2 exceeds the configured cap");
  ComplexMatrix s(d * d);
  for (const auto& a : t.kraus_ops()) {
    ComplexMatrix conj_a(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) conj_a(i, j) = std::conj(a(i, j));
    s += kron(conj_a, a);
  }
  return s;
}

ReversibilityReport check_reversible(const KrausChannel& t, int trials, std::uint64_t seed,
                                     double tol) {
  ReversibilityReport rep{};
  rep.superop_defect = superoperator(t).hermiticity_defect();
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    const HermitianOperator f = random_hermitian(t.dim(), rng);
    const HermitianOperator g = random_hermitian(t.dim(), rng);
    const double lhs = ntrace_product(f.matrix(), t.apply(g.matrix()));
    const double rhs = ntrace_product(t.apply(f.matrix()), g.matrix());
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  rep.max_deviation = worst;
  rep.reversible = worst <= tol && rep.superop_defect <= tol;
  return rep;
}

PrimitivityReport check_primitive(const KrausChannel& t, double eps) {
  const ComplexMatrix s = superoperator(t);
  const double defect = s.hermiticity_defect();
  if (defect > 1e-10 * std::max(1.0, s.max_abs()))
    throw std::invalid_argument(
        "check_primitive: channel is not reversible (superoperator hermiticity defect " +
        std::to_string(defect) + "); the peripheral-spectrum test here covers reversible "
        "channels only");
  const EighResult spec = eigh(s);

  PrimitivityReport rep{};
  rep.fixed_point_multiplicity = 0;
  rep.second_largest_modulus = 0.0;
  for (double mu : spec.eigenvalues) {
    if (std::abs(mu - 1.0) <= eps) {
      ++rep.fixed_point_multiplicity;
      rep.peripheral.push_back(mu);
    } else if (std::abs(mu) >= 1.0 - eps) {
      rep.peripheral.push_back(mu);
    } else {
      rep.second_largest_modulus = std::max(rep.second_largest_modulus, std::abs(mu));
    }
  }
  rep.primitive =
      rep.fixed_point_multiplicity == 1 && rep.peripheral.size() == 1;
  return rep;
}

LindbladGenerator LindbladGenerator::depolarizing_site_sum(int n_qubits) {
  DepolarizingFamily fam(n_qubits, 0.0);  // validates n against the cap
  LindbladGenerator g;
  g.kind_ = Kind::DepolarizingSiteSum;
  g.n_ = n_qubits;
  g.c0_ = 1.0;
  g.dim_ = fam.dim();
  return g;
}

LindbladGenerator LindbladGenerator::from_channel(KrausChannel t, double c0) {
  if (!(c0 > 0.0)) throw std::invalid_argument("LindbladGenerator: c0 must be positive");
  if (!t.is_unital()) throw std::invalid_argument("LindbladGenerator: base channel must be unital");
  LindbladGenerator g;
  g.kind_ = Kind::FromChannel;
  g.c0_ = c0;
  g.dim_ = t.dim();
  auto s = std::make_shared<ComplexMatrix>(superoperator(t));
  const double defect = s->hermiticity_defect();
  if (defect > 1e-10 * std::max(1.0, s->max_abs()))
    throw std::invalid_argument("LindbladGenerator: base channel must be reversible "
                                "(superoperator hermiticity defect " +
                                std::to_string(defect) + ")");
  g.base_ = std::move(t);
  g.superop_ = std::move(s);
  return g;
}

const KrausChannel& LindbladGenerator::base_channel() const {
  if (!base_) throw std::logic_error("LindbladGenerator: site-sum generator has no base channel");
  return *base_;
}

bool LindbladGenerator::is_ergodic() const {
  if (kind_ == Kind::DepolarizingSiteSum) return true;
  if (!prim_) prim_ = check_primitive(*base_);
  return prim_->fixed_point_multiplicity == 1;
}

bool LindbladGenerator::is_primitive() const {
  if (kind_ == Kind::DepolarizingSiteSum) return true;
  if (!prim_) prim_ = check_primitive(*base_);
  return prim_->primitive;
}

HermitianOperator LindbladGenerator::apply(const HermitianOperator& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("LindbladGenerator::apply: dimension mismatch");
  if (kind_ == Kind::DepolarizingSiteSum) {
    // sum_k (f - twirl_k f); twirl_k is the gamma = 0 single-site map
    const ComplexMatrix& m = f.matrix();
    ComplexMatrix acc(dim_);
    for (int site = 0; site < n_; ++site) {
      const std::size_t mask = std::size_t{1} << (n_ - 1 - site);
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
          cplx v = m(i, j);
          if ((i & mask) == (j & mask))
            v -= 0.5 * (m(i & ~mask, j & ~mask) + m(i | mask, j | mask));
          acc(i, j) += v;
        }
    }
    return HermitianOperator(std::move(acc), 1e-10);
  }
  ComplexMatrix out = f.matrix() - base_->apply(f.matrix());
  out *= cplx(c0_);
  return HermitianOperator(std::move(out), 1e-9);
}

HermitianOperator LindbladGenerator::semigroup(double t, const HermitianOperator& f) const {
  if (f.dim() != dim_)
    throw std::invalid_argument("LindbladGenerator::semigroup: dimension mismatch");
  if (!(t >= 0.0)) throw std::invalid_argument("LindbladGenerator::semigroup: t must be >= 0");
  if (kind_ == Kind::DepolarizingSiteSum)
    return HermitianOperator(depolarize_apply(n_, std::exp(-t), f.matrix()), 1e-10);

  const std::size_t d2 = dim_ * dim_;
  ComplexMatrix gen(d2);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      gen(i, j) = -t * c0_ * ((i == j ? cplx(1.0) : cplx(0.0)) - (*superop_)(i, j));
  const ComplexMatrix propagator = expm(gen);
  return HermitianOperator(unvec(propagator.apply(vec(f.matrix())), dim_), 1e-8);
}

KrausChannel random_pauli_mixture(int n_qubits, std::uint64_t seed) {
  DepolarizingFamily fam(n_qubits, 0.0);  // range check on n
  Rng rng(seed);
  const std::uint64_t total = std::uint64_t{1} << (2 * n_qubits);
  std::vector<double> w(total);
  double sum = 0.0;
  for (auto& x : w) {
    x = rng.uniform() + 1e-4;  // keep every string present so the mixture is primitive
    sum += x;
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    ComplexMatrix op = pauli_string(n_qubits, code);
    op *= cplx(std::sqrt(w[code] / sum));
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel random_unitary_mixture(std::size_t d, int terms, std::uint64_t seed) {
  if (terms < 1) throw std::invalid_argument("random_unitary_mixture: need at least one term");
  Rng rng(seed);
  std::vector<double> w(terms);
  double sum = 0.0;
  for (auto& x : w) {
    x = rng.uniform() + 1e-4;
    sum += x;
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(terms);
  for (int i = 0; i < terms; ++i) {
    ComplexMatrix u = random_unitary(d, rng);
    u *= cplx(std::sqrt(w[i] / sum));
    ops.push_back(std::move(u));
  }
  return KrausChannel(std::move(ops));
}

std::string to_json(const DepolarizingFamily& fam) {
  nlohmann::ordered_json j;
  j["type"] = "depolarizing";
  j["n"] = fam.n;
  j["gamma"] = fam.gamma;
  return j.dump();
}

std::string to_json(const KrausChannel& t) {
  nlohmann::ordered_json j;
  j["type"] = "kraus";
  j["dim"] = t.dim();
  nlohmann::ordered_json ops = nlohmann::ordered_json::array();
  for (const auto& a : t.kraus_ops()) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t k = 0; k < t.dim(); ++k)
        entries.push_back({a(i, k).real(), a(i, k).imag()});
    ops.push_back(std::move(entries));
  }
  j["ops"] = std::move(ops);
  return j.dump();
}

ParsedChannel channel_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ParsedChannel out;
  const std::string type = j.at("type").get<std::string>();
  if (type == "depolarizing") {
    out.depolarizing =
        DepolarizingFamily(j.at("n").get<int>(), j.at("gamma").get<double>());
    return out;
  }
  if (type == "kraus") {
    const std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<ComplexMatrix> ops;
    for (const auto& entries : j.at("ops")) {
      if (entries.size() != d * d)
        throw std::invalid_argument("channel_from_json: op entry count is not dim^2");
      ComplexMatrix a(d);
      std::size_t idx = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k, ++idx)
          a(i, k) = cplx(entries[idx][0].get<double>(), entries[idx][1].get<double>());
      ops.push_back(std::move(a));
    }
    out.kraus = KrausChannel(std::move(ops));
    return out;
  }
  throw std::invalid_argument("channel_from_json: unknown type \"" + type + "\"");
}

}  // namespace qrhc
