#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qrhc/functionals.hpp"

using namespace qrhc;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

ComplexMatrix sigma_z() {
  ComplexMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

// Ent(f^2)/E(f,f) for f = diag(sqrt(2-x), sqrt(x)) under the single-qubit
// site generator, straight from the definitions
double witness_ratio(double x) {
  const HermitianOperator f = diag_operator({std::sqrt(2.0 - x), std::sqrt(x)});
  const LindbladGenerator l = LindbladGenerator::depolarizing_site_sum(1);
  return entropy(mat_pow(f, 2.0)) / dirichlet_form(l, f, f);
}

}  // namespace

TEST_CASE("entropy anchors") {
  CHECK(entropy(HermitianOperator(ComplexMatrix::identity(4))) == 0.0);
  CHECK(close(entropy(diag_operator({2.0, 0.0})), std::log(2.0), 1e-12));
  // flat spectra at any scale carry no entropy
  CHECK(close(entropy(diag_operator({3.5, 3.5, 3.5})), 0.0, 1e-12));
}

TEST_CASE("entropy scales linearly under dilation") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator f = random_psd(4, 100 + trial, PositivityClass::PositiveDefinite);
    const double c = 3.7;
    HermitianOperator cf{f.matrix() * cplx(c)};
    const double lhs = entropy(cf);
    const double rhs = c * entropy(f);
    CHECK(close(lhs, rhs, 1e-10 * std::max(1.0, std::abs(rhs))));
  }
  (void)rng;
}

TEST_CASE("entropy rejects bad inputs") {
  CHECK_THROWS_AS(entropy(diag_operator({0.0, 0.0})), std::domain_error);
  CHECK_THROWS_AS(entropy(HermitianOperator(sigma_z())), std::domain_error);
  CHECK_THROWS_AS(entropy_values({}), std::invalid_argument);
}

TEST_CASE("entropy is nonnegative and vanishes only on flat spectra") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianOperator f = random_psd(5, 500 + trial, PositivityClass::PositiveSemiDefinite);
    CHECK(entropy(f) >= -1e-12);
  }
  (void)rng;
}

TEST_CASE("dirichlet form vanishes against the identity") {
  const LindbladGenerator l = LindbladGenerator::depolarizing_site_sum(2);
  const HermitianOperator f = random_psd(4, 42, PositivityClass::PositiveDefinite);
  const HermitianOperator id(ComplexMatrix::identity(4));
  CHECK(close(dirichlet_form(l, f, id), 0.0, 1e-12));
  CHECK(close(dirichlet_form(l, id, f), 0.0, 1e-12));
}

TEST_CASE("dirichlet form anchor: sigma_z against itself") {
  const LindbladGenerator l = LindbladGenerator::depolarizing_site_sum(1);
  const HermitianOperator z{sigma_z()};
  CHECK(close(dirichlet_form(l, z, z), 1.0, 1e-14));
}

TEST_CASE("dirichlet form is symmetric and nonnegative on the diagonal") {
  Rng rng(13);
  for (int n : {1, 2}) {
    const LindbladGenerator l = LindbladGenerator::depolarizing_site_sum(n);
    for (int trial = 0; trial < 25; ++trial) {
      const HermitianOperator f = random_hermitian(std::size_t{1} << n, rng);
      const HermitianOperator g = random_hermitian(std::size_t{1} << n, rng);
      const double fg = dirichlet_form(l, f, g);
      const double gf = dirichlet_form(l, g, f);
      CHECK(close(fg, gf, 1e-10 * std::max(1.0, std::abs(fg))));
      CHECK(dirichlet_form(l, f, f) >= -1e-10);
    }
  }
}

TEST_CASE("induced transition matrix of the identity channel") {
  const KrausChannel t({ComplexMatrix::identity(3)});
  const HermitianOperator g = random_psd(3, 77, PositivityClass::PositiveDefinite);
  const InducedTransitionMatrix p = induced_transition_matrix(t, g);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(close(p(i, j), i == j ? 1.0 : 0.0, 1e-12));
}

TEST_CASE("induced transition matrix of single-qubit depolarizing") {
  for (double gamma : {0.0, 0.3, 1.0}) {
    const KrausChannel t = depolarizing_kraus(1, gamma);
    const HermitianOperator g = random_psd(2, 99, PositivityClass::PositiveDefinite);
    const InducedTransitionMatrix p = induced_transition_matrix(t, g);
    const double stay = (1.0 + gamma) / 2.0;
    CHECK(close(p(0, 0), stay, 1e-12));
    CHECK(close(p(1, 1), stay, 1e-12));
    CHECK(close(p(0, 1), 1.0 - stay, 1e-12));
    CHECK(close(p(1, 0), 1.0 - stay, 1e-12));
  }
}

TEST_CASE("induced transition matrix rows sum to one") {
  const KrausChannel t = random_pauli_mixture(2, 5);
  const HermitianOperator g = random_psd(4, 6, PositivityClass::PositiveDefinite);
  const InducedTransitionMatrix p = induced_transition_matrix(t, g);
  for (std::size_t i = 0; i < 4; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      row += p(i, j);
      col += p(j, i);
    }
    CHECK(close(row, 1.0, 1e-12));
    CHECK(close(col, 1.0, 1e-12));
  }
}

TEST_CASE("induced transition matrix rejects non-reversible channels") {
  ComplexMatrix u(2);
  u(0, 0) = std::cos(0.3);
  u(0, 1) = std::sin(0.3);
  u(1, 0) = -std::sin(0.3);
  u(1, 1) = std::cos(0.3);
  const KrausChannel rot({u});
  const HermitianOperator g = random_psd(2, 8, PositivityClass::PositiveDefinite);
  CHECK_THROWS_AS(induced_transition_matrix(rot, g), std::invalid_argument);
}

TEST_CASE("pairwise identity ties dirichlet form to the induced transition matrix") {
  // tau(f L g) for powers of one operator equals a discrete Dirichlet sum
  // over the induced transition matrix, for L = c0 (id - T)
  for (int n : {1, 2}) {
    const std::size_t d = std::size_t{1} << n;
    for (int trial = 0; trial < 10; ++trial) {
      const KrausChannel t =
          (trial % 2 == 0) ? depolarizing_kraus(n, 0.4) : random_pauli_mixture(n, 50 + trial);
      const double c0 = 1.0 + 0.5 * (trial % 3);
      const LindbladGenerator l = LindbladGenerator::from_channel(t, c0);
      const HermitianOperator g = random_psd(d, 300 + trial, PositivityClass::PositiveDefinite);
      const InducedTransitionMatrix p = induced_transition_matrix(t, g);
      const auto& lam = g.spectrum().eigenvalues;
      for (auto [a, b] : {std::pair{1.0, 2.0}, std::pair{1.0, -1.0}, std::pair{0.5, 0.5}}) {
        const double lhs = dirichlet_form(l, mat_pow(g, a), mat_pow(g, b));
        double rhs = 0.0;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            rhs += p(i, j) * (std::pow(lam[i], a) - std::pow(lam[j], a)) *
                   (std::pow(lam[i], b) - std::pow(lam[j], b));
        rhs *= c0 / (2.0 * static_cast<double>(d));
        CHECK(close(lhs, rhs, 1e-9 * std::max(1.0, std::abs(lhs))));
      }
    }
  }
}

TEST_CASE("two-point witness family ratio anchor and ceiling") {
  CHECK(close(witness_ratio(0.2), 1.8403210358424855, 1e-12));
  double prev = 0.0;
  for (double x : {0.05, 0.2, 0.4, 0.6, 0.8, 0.9, 0.99}) {
    const double r = witness_ratio(x);
    CHECK(r <= 2.0 + 1e-8);
    CHECK(r > prev);  // ratio climbs toward 2 as the spectrum flattens
    prev = r;
  }
  CHECK(prev > 1.99);
}

TEST_CASE("two-log-sobolev inequality holds with constant 2 for site sums") {
  Rng rng(17);
  for (int n : {1, 2}) {
    const LindbladGenerator l = LindbladGenerator::depolarizing_site_sum(n);
    for (int trial = 0; trial < 40; ++trial) {
      const HermitianOperator f =
          random_psd(std::size_t{1} << n, 900 + trial, PositivityClass::PositiveDefinite);
      const double ent = entropy(mat_pow(f, 2.0));
      const double energy = dirichlet_form(l, f, f);
      CHECK(ent <= 2.0 * energy + 1e-9 * std::max(1.0, ent));
    }
  }
  (void)rng;
}

TEST_CASE("lsi estimate approaches 2 on the single-qubit site generator") {
  const LindbladGenerator l = LindbladGenerator::depolarizing_site_sum(1);
  const Lsi2Estimate est = estimate_lsi2_constant(l, 20, 0, 600);
  CHECK(est.alpha_lower >= 1.5);
  CHECK(est.alpha_lower <= 2.0 + 1e-8);
  CHECK(close(est.ent / est.dirichlet, est.alpha_lower, 1e-9 * est.alpha_lower));
  CHECK(est.witness_eigenvalues.size() == 2);
  CHECK(est.witness_eigenvalues[0] >= est.witness_eigenvalues[1]);
}

TEST_CASE("lsi estimate is deterministic for a fixed seed") {
  const LindbladGenerator l = LindbladGenerator::depolarizing_site_sum(1);
  const Lsi2Estimate a = estimate_lsi2_constant(l, 4, 123, 200);
  const Lsi2Estimate b = estimate_lsi2_constant(l, 4, 123, 200);
  CHECK(a.alpha_lower == b.alpha_lower);
  CHECK(a.witness_eigenvalues == b.witness_eigenvalues);
}

TEST_CASE("lsi estimate rejects non-ergodic generators") {
  const KrausChannel id({ComplexMatrix::identity(2)});
  const LindbladGenerator l = LindbladGenerator::from_channel(id, 1.0);
  CHECK_THROWS_AS(estimate_lsi2_constant(l, 2, 0, 50), std::invalid_argument);
}

TEST_CASE("lsi estimate works for ergodic channel-derived generators") {
  const LindbladGenerator l = LindbladGenerator::from_channel(random_pauli_mixture(1, 21), 1.0);
  const Lsi2Estimate est = estimate_lsi2_constant(l, 6, 0, 300);
  CHECK(est.alpha_lower > 0.0);
  CHECK(std::isfinite(est.alpha_lower));
}
