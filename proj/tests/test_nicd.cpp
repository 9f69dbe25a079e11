#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qrhc/cube.hpp"
#include "qrhc/nicd.hpp"
#include "qrhc/rng.hpp"

using namespace qrhc;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

NicdInstance make_instance(BasisFamily bf, EffectFamily ef, int n, double gamma,
                           std::uint64_t k, std::uint64_t seed) {
  const ComplexMatrix basis = nicd_basis(bf, n, seed);
  return NicdInstance(n, basis, nicd_effect(ef, n, basis, seed + 1), gamma, k);
}

}  // namespace

TEST_CASE("instance validation") {
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const HermitianOperator balanced = diag_operator({1.0, 0.0});
  CHECK_NOTHROW(NicdInstance(1, id2, balanced, 0.5, 3));

  ComplexMatrix skew = id2;
  skew(0, 0) = 0.9;
  CHECK_THROWS_AS(NicdInstance(1, skew, balanced, 0.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(NicdInstance(1, id2, diag_operator({1.0, 0.5}), 0.5, 3),
                  std::invalid_argument);  // tau = 3/4
  CHECK_THROWS_AS(NicdInstance(1, id2, diag_operator({2.0, -1.0}), 0.5, 3),
                  std::invalid_argument);  // spectrum outside [0,1]
  CHECK_THROWS_AS(NicdInstance(1, id2, balanced, 1.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(NicdInstance(1, id2, balanced, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(NicdInstance(11, ComplexMatrix::identity(2048),
                               HermitianOperator(ComplexMatrix::identity(2048) * cplx(0.5)),
                               0.5, 1),
                  std::invalid_argument);
}

TEST_CASE("one player always succeeds with probability one half") {
  for (int n : {1, 2, 3, 4}) {
    for (int trial = 0; trial < 25; ++trial) {
      Rng rng(static_cast<std::uint64_t>(100 * n + trial));
      const double gamma = rng.uniform();
      const NicdInstance inst =
          make_instance(BasisFamily::Haar, EffectFamily::RandomBalanced, n, gamma, 1,
                        static_cast<std::uint64_t>(31 * n + trial));
      const NicdResult res = success_probability(inst);
      CHECK(close(res.p_all_m, 0.5, 1e-12));
      CHECK(close(res.p_all_not_m, 0.5, 1e-12));
    }
  }
}

TEST_CASE("fully depolarized play is a sequence of fair coins") {
  for (std::uint64_t k : {1ull, 2ull, 5ull, 16ull}) {
    const NicdInstance inst = make_instance(BasisFamily::Ghz, EffectFamily::RandomBalanced, 3,
                                            0.0, k, 7);
    const NicdResult res = success_probability(inst);
    CHECK(close(res.p_all_m, std::pow(0.5, static_cast<double>(k)), 1e-13));
    CHECK(close(res.p_all_not_m, std::pow(0.5, static_cast<double>(k)), 1e-13));
  }
}

TEST_CASE("noiseless play with an aligned projector is perfectly correlated") {
  for (BasisFamily bf : {BasisFamily::Product, BasisFamily::Ghz, BasisFamily::Haar}) {
    for (std::uint64_t k : {1ull, 2ull, 7ull, 64ull}) {
      const NicdInstance inst = make_instance(bf, EffectFamily::HalfProjector, 2, 1.0, k, 11);
      const NicdResult res = success_probability(inst);
      CHECK(close(res.p_all_m, 0.5, 1e-12));
      CHECK(close(res.p_all_not_m, 0.5, 1e-12));
    }
  }
}

TEST_CASE("product basis with a diagonal effect reduces to the cube simulation") {
  for (int n : {1, 2, 3, 5}) {
    Rng rng(static_cast<std::uint64_t>(50 + n));
    const std::size_t d = std::size_t{1} << n;
    std::vector<double> f(d);
    double tau = 0.0;
    for (auto& x : f) {
      x = rng.uniform();
      tau += x;
    }
    // recenter and shrink about one half so the mean is exactly balanced
    const double mean = tau / static_cast<double>(d);
    for (auto& x : f) x = 0.5 + 0.45 * (x - mean);
    const CubeFunction cf(n, f);
    CHECK(close(cf.mean(), 0.5, 1e-12));

    for (std::uint64_t k : {1ull, 2ull, 8ull, 64ull}) {
      for (double gamma : {0.0, 0.35, 0.8, 1.0}) {
        ComplexMatrix diag(d);
        for (std::size_t i = 0; i < d; ++i) diag(i, i) = f[i];
        const NicdInstance inst(n, ComplexMatrix::identity(d), HermitianOperator(diag), gamma,
                                k);
        const NicdResult res = success_probability(inst);
        CHECK(close(res.p_all_m, nicd_success(cf, static_cast<int>(k), gamma), 1e-12));
      }
    }
  }
}

TEST_CASE("product basis with the majority effect matches the closed-form count") {
  for (int n : {1, 3, 5}) {
    for (std::uint64_t k : {1ull, 2ull, 16ull, 64ull}) {
      for (double gamma : {0.0, 0.4, 0.9}) {
        const NicdInstance inst =
            make_instance(BasisFamily::Product, EffectFamily::MajorityDiagonal, n, gamma, k, 1);
        const NicdResult res = success_probability(inst);
        CHECK(close(res.p_all_m, majority_nicd(n, static_cast<int>(k), gamma), 1e-12));
      }
    }
  }
}

TEST_CASE("success probabilities are well formed and monotone") {
  for (int trial = 0; trial < 12; ++trial) {
    const BasisFamily bf = trial % 2 ? BasisFamily::Haar : BasisFamily::Ghz;
    const EffectFamily ef = trial % 3 == 0 ? EffectFamily::RandomBalanced
                            : trial % 3 == 1 ? EffectFamily::MajorityDiagonal
                                             : EffectFamily::HalfProjector;
    Rng rng(static_cast<std::uint64_t>(900 + trial));
    const double gamma = rng.uniform();
    double prev = 1.0;
    for (std::uint64_t k : {1ull, 2ull, 3ull, 6ull, 12ull, 48ull}) {
      const NicdInstance inst =
          make_instance(bf, ef, 3, gamma, k, static_cast<std::uint64_t>(70 + trial));
      const NicdResult res = success_probability(inst);
      for (double p : res.per_state) {
        CHECK(p >= -1e-12);
        CHECK(p <= 1.0 + 1e-12);
      }
      CHECK(res.p_all_m + res.p_all_not_m <= 1.0 + 1e-10);
      CHECK(res.p_all_m <= prev + 1e-12);
      prev = res.p_all_m;

      // swapping the effect for its complement swaps the two probabilities
      const HermitianOperator comp{ComplexMatrix::identity(inst.m.dim()) -
                                   inst.m.matrix()};
      const NicdResult swapped =
          success_probability(NicdInstance(inst.n, inst.basis, comp, inst.gamma, inst.k));
      CHECK(close(swapped.p_all_m, res.p_all_not_m, 1e-14));
      CHECK(close(swapped.p_all_not_m, res.p_all_m, 1e-14));
    }
  }
}

TEST_CASE("bound terms: anchors and the exact three-factor split") {
  const NicdBound near_one = nicd_bound_rhs(0.999999, 0.3, 5);
  CHECK(near_one.term_a > 0.999);
  CHECK(near_one.combined > 1.0);

  // nu = 1 at gamma = 1/sqrt(2): delta^{1/k} beats 1 - (nu ln k)/k
  const double g = 1.0 / std::sqrt(2.0);
  for (std::uint64_t k = 2; k <= 1000000; k *= 10) {
    const double kk = static_cast<double>(k);
    const NicdBound b = nicd_bound_rhs(1.0 / kk, g, k);
    CHECK(b.term_a > 1.0 - std::log(kk) / kk);
  }

  for (double delta : {0.01, 0.25, 0.9}) {
    for (double gamma : {0.0, 0.5, 0.9}) {
      const NicdBound b = nicd_bound_rhs(delta, gamma, 100);
      const double split = b.factor_flat * b.factor_cross * b.factor_decay;
      CHECK(close(split, b.term_b, 1e-12 * b.term_b));
    }
  }

  const NicdBound b = nicd_bound_rhs(0.01, 0.5, 100);
  CHECK(std::isfinite(b.combined));
  CHECK(b.combined > 0.0);

  CHECK_THROWS_AS(nicd_bound_rhs(0.0, 0.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(nicd_bound_rhs(1.0, 0.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(nicd_bound_rhs(0.5, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(nicd_bound_rhs(0.5, 0.5, 0), std::invalid_argument);
}

TEST_CASE("bound terms: threshold delta makes the factor bounds kick in") {
  // at delta = (e^{c sqrt(ln k)}/k)^nu the cross factor dominates
  // e^{-2 g sqrt(nu ln k)/(1-g^2)} and the decay factor dominates
  // e^{c sqrt(ln k)}/k
  const double c = 0.5;
  for (double gamma : {0.45, 0.6, 0.8}) {
    const double nu = 1.0 / (gamma * gamma) - 1.0;
    for (std::uint64_t k : {10ull, 1000ull, 1000000ull}) {
      const double kk = static_cast<double>(k);
      const double base = std::exp(c * std::sqrt(std::log(kk))) / kk;
      const double delta = std::pow(base, nu);
      if (!(delta > 0.0 && delta < 1.0)) continue;
      const NicdBound b = nicd_bound_rhs(delta, gamma, k);
      const double g2 = 1.0 - gamma * gamma;
      CHECK(b.factor_cross >=
            std::exp(-2.0 * gamma * std::sqrt(nu * std::log(kk)) / g2) * (1.0 - 1e-12));
      CHECK(b.factor_decay >= base * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("contradiction chain passes on aligned noiseless instances") {
  const NicdInstance inst = make_instance(BasisFamily::Ghz, EffectFamily::HalfProjector, 2,
                                          1.0, 4, 3);
  const VerificationReport r = verify_nicd_contradiction(inst, 0.25);
  CHECK(r.pass);
  // per-state probabilities are 0 or 1, so S is the supporting half
  bool saw_sigma = false;
  for (const auto& [key, value] : r.params) {
    if (key == "sigma") saw_sigma = true;
  }
  CHECK(saw_sigma);
  CHECK(close(r.lhs, 0.0, 1e-14));  // no failure mass inside S at gamma = 1
}

TEST_CASE("contradiction chain: inapplicable and boundary paths") {
  // gamma = 0, k = 2: p_all_m = 1/4 < 2 * 0.25
  const NicdInstance cold = make_instance(BasisFamily::Product,
                                          EffectFamily::MajorityDiagonal, 3, 0.0, 2, 5);
  CHECK_THROWS_AS(verify_nicd_contradiction(cold, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(verify_nicd_contradiction(cold, 0.0), std::invalid_argument);

  // k = 1 keeps every state in S: sigma = 1, ceiling skipped but still a pass
  const NicdInstance one = make_instance(BasisFamily::Haar, EffectFamily::RandomBalanced, 2,
                                         0.5, 1, 8);
  const NicdResult res = success_probability(one);
  double min_p = 1.0;
  for (double p : res.per_state) min_p = std::min(min_p, p);
  if (min_p > 0.1) {
    const VerificationReport r = verify_nicd_contradiction(one, std::min(0.2, min_p));
    CHECK(r.pass);
    bool skipped = false;
    for (const auto& [key, value] : r.params)
      if (key == "ceiling_slack") skipped = true;
    CHECK(skipped);
  }
}

TEST_CASE("contradiction chain holds across a randomized campaign") {
  Rng rng(77);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const BasisFamily bf = trial % 3 == 0   ? BasisFamily::Product
                           : trial % 3 == 1 ? BasisFamily::Ghz
                                            : BasisFamily::Haar;
    const EffectFamily ef = trial % 2 ? EffectFamily::RandomBalanced
                                      : EffectFamily::MajorityDiagonal;
    const double gamma = rng.uniform();
    const std::uint64_t k = 1 + rng.below(6);
    const NicdInstance inst =
        make_instance(bf, ef, n, gamma, k, static_cast<std::uint64_t>(3000 + trial));
    const NicdResult res = success_probability(inst);
    if (res.p_all_m < 1e-6) continue;
    const double delta = 0.45 * res.p_all_m;
    const VerificationReport r = verify_nicd_contradiction(inst, delta);
    CHECK(r.pass);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("ghz basis: explicit correlation structure") {
  const ComplexMatrix ghz2 = nicd_basis(BasisFamily::Ghz, 2, 0);
  // column 0 is (|00> + |11>)/sqrt(2)
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(close(std::abs(ghz2(0, 0) - cplx(r)), 0.0, 1e-15));
  CHECK(close(std::abs(ghz2(3, 0) - cplx(r)), 0.0, 1e-15));
  CHECK(close(std::abs(ghz2(1, 0)), 0.0, 1e-15));
  CHECK(close(std::abs(ghz2(2, 0)), 0.0, 1e-15));

  for (int n : {1, 2, 3, 4}) {
    const ComplexMatrix u = nicd_basis(BasisFamily::Ghz, n, 0);
    const ComplexMatrix gram = u.adjoint() * u;
    for (std::size_t i = 0; i < gram.dim(); ++i)
      for (std::size_t j = 0; j < gram.dim(); ++j)
        CHECK(close(std::abs(gram(i, j) - (i == j ? cplx(1.0) : cplx(0.0))), 0.0, 1e-14));
  }

  // n = 3 column 0 must be the three-qubit cat state
  const ComplexMatrix ghz3 = nicd_basis(BasisFamily::Ghz, 3, 0);
  CHECK(close(std::abs(ghz3(0, 0) - cplx(r)), 0.0, 1e-15));
  CHECK(close(std::abs(ghz3(7, 0) - cplx(r)), 0.0, 1e-15));
  for (std::size_t row = 1; row < 7; ++row) CHECK(close(std::abs(ghz3(row, 0)), 0.0, 1e-15));
}

TEST_CASE("sweep: rows, envelope, and serialization") {
  const SweepTable table =
      entangled_basis_sweep(3, 16, 0.6, BasisFamily::Product, EffectFamily::MajorityDiagonal, 0,
                            0.5);
  REQUIRE(table.rows.size() == 5);  // k = 1, 2, 4, 8, 16
  CHECK(table.rows.front().k == 1);
  CHECK(table.rows.back().k == 16);
  for (const SweepRow& row : table.rows) {
    CHECK(row.basis_id == "product");
    CHECK(row.m_id == "majority");
    CHECK(close(row.p_all_m, majority_nicd(3, static_cast<int>(row.k), 0.6), 1e-12));
  }
  const double nu = 1.0 / 0.36 - 1.0;
  CHECK(close(table.envelope,
              std::pow(std::exp(0.5 * std::sqrt(std::log(16.0))) / 16.0, nu), 1e-15));

  const std::string csv = sweep_table_to_csv(table);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "basis_id,M_id,n,k,gamma,p_all_M,p_all_notM");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find("product,majority,3,") == 0);
    CHECK(line.find(',') != std::string::npos);
  }
  CHECK(rows == 5);

  const JsonValue j = sweep_table_to_json(table);
  const std::string text = j.dump();
  CHECK(text.find("\"envelope_c\":0.5") != std::string::npos);
  CHECK(text.find("\"basis_id\":\"product\"") != std::string::npos);

  // a non-power-of-two cap appears as the final row
  const SweepTable odd =
      entangled_basis_sweep(2, 11, 0.3, BasisFamily::Ghz, EffectFamily::HalfProjector, 2, 1.0);
  REQUIRE(odd.rows.size() == 5);  // 1, 2, 4, 8, 11
  CHECK(odd.rows.back().k == 11);
}
