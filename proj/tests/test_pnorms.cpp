#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qrhc/pnorms.hpp"
#include "qrhc/rng.hpp"

using namespace qrhc;

namespace {
bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }
}

TEST_CASE("pexponent states") {
  CHECK(PExponent(2.0).is_finite());
  CHECK(PExponent(0.0).is_zero_limit());
  CHECK(PExponent(HUGE_VAL).is_pos_inf());
  CHECK(PExponent(-HUGE_VAL).is_neg_inf());
  CHECK(PExponent::zero_limit().is_zero_limit());
  CHECK_THROWS_AS(PExponent(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(PExponent::zero_limit().value(), std::logic_error);
  CHECK(PExponent::neg_inf() < PExponent(-3.0));
  CHECK(PExponent(-3.0) < PExponent::zero_limit());
  CHECK(PExponent::zero_limit() < PExponent(0.5));
  CHECK(PExponent(1.0) < PExponent::pos_inf());
}

TEST_CASE("holder conjugate anchors") {
  CHECK(holder_conjugate(PExponent(2.0)).value() == 2.0);
  CHECK(holder_conjugate(PExponent(0.5)).value() == -1.0);
  CHECK(holder_conjugate(PExponent(-1.0)).value() == 0.5);
  CHECK(holder_conjugate(PExponent(1.0)).is_pos_inf());
  CHECK(holder_conjugate(PExponent::pos_inf()).value() == 1.0);
  CHECK(holder_conjugate(PExponent::neg_inf()).value() == 1.0);
  CHECK_THROWS_AS(holder_conjugate(PExponent::zero_limit()), std::domain_error);
}

TEST_CASE("holder conjugate involution") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    double p = rng.uniform(-5.0, 5.0);
    if (std::abs(p) < 1e-3 || std::abs(p - 1.0) < 1e-3) continue;
    const double back = holder_conjugate(holder_conjugate(PExponent(p))).value();
    CHECK(close(back, p, 1e-12 * std::max(1.0, std::abs(p))));
  }
  CHECK(holder_conjugate(holder_conjugate(PExponent(1.0))).value() == 1.0);
}

TEST_CASE("pnorm anchors") {
  const HermitianOperator f = diag_operator({4.0, 1.0});
  // ((sqrt 4 + sqrt 1)/2)^2 = 2.25
  CHECK(close(pnorm(f, PExponent(0.5)), 2.25, 1e-12));
  CHECK(close(pnorm(f, PExponent::neg_inf()), 1.0, 0.0));
  CHECK(close(pnorm(f, PExponent::pos_inf()), 4.0, 0.0));
  // geometric mean sqrt(4*1) = 2
  CHECK(close(pnorm(f, PExponent::zero_limit()), 2.0, 1e-12));
  CHECK(close(pnorm(f, PExponent(1.0)), 2.5, 1e-12));
  // harmonic-type: (tau(f^{-1}))^{-1} = ((1/4 + 1)/2)^{-1} = 1.6
  CHECK(close(pnorm(f, PExponent(-1.0)), 1.6, 1e-12));
}

TEST_CASE("pnorm of flat operator is the constant") {
  for (double p : {-3.0, -1.0, 0.0, 0.5, 1.0, 2.0, 7.5}) {
    const HermitianOperator c = diag_operator({3.25, 3.25, 3.25});
    CHECK(close(pnorm(c, PExponent(p)), 3.25, 1e-12));
  }
  CHECK(close(pnorm(diag_operator({3.25, 3.25}), PExponent::pos_inf()), 3.25, 0.0));
  CHECK(close(pnorm(diag_operator({3.25, 3.25}), PExponent::neg_inf()), 3.25, 0.0));
}

TEST_CASE("pnorm indefinite operators use |f| for p >= 1") {
  const HermitianOperator f = diag_operator({1.0, -1.0});
  CHECK(close(pnorm(f, PExponent(1.0)), 1.0, 1e-15));
  CHECK(close(pnorm(f, PExponent(2.0)), 1.0, 1e-15));
  CHECK(close(pnorm(diag_operator({-5.0, 2.0}), PExponent::pos_inf()), 5.0, 0.0));
}

TEST_CASE("pnorm domain errors") {
  CHECK_THROWS_AS(pnorm(diag_operator({1.0, -1.0}), PExponent(0.5)), std::domain_error);
  CHECK_THROWS_AS(pnorm(diag_operator({1.0, 0.0}), PExponent(-1.0)), std::domain_error);
  CHECK_THROWS_AS(pnorm(diag_operator({1.0, 0.0}), PExponent::zero_limit()), std::domain_error);
  CHECK_THROWS_AS(pnorm(diag_operator({1.0, 0.0}), PExponent::neg_inf()), std::domain_error);
  CHECK_NOTHROW(pnorm(diag_operator({1.0, 0.0}), PExponent(0.5)));
}

TEST_CASE("pnorm monotone in the exponent") {
  const double grid[] = {-HUGE_VAL, -1000.0, -3.0, -1.0, -0.25, 0.0, 0.25, 0.5,
                         1.0,       1.5,     2.0,  4.0,  1000.0, HUGE_VAL};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const HermitianOperator f = random_psd(4, 500 + seed, PositivityClass::PositiveDefinite);
    double prev = -HUGE_VAL;
    for (double p : grid) {
      const double cur = pnorm(f, PExponent(p));
      CHECK(cur >= prev - 1e-10 * std::max(1.0, std::abs(cur)));
      prev = cur;
    }
  }
}

TEST_CASE("pnorm positive homogeneity") {
  const HermitianOperator f = random_psd(3, 77, PositivityClass::PositiveDefinite);
  for (double p : {-2.0, 0.0, 0.5, 1.0, 3.0}) {
    ComplexMatrix scaled = f.matrix();
    scaled *= cplx(2.3);
    const double lhs = pnorm(HermitianOperator(scaled), PExponent(p));
    const double rhs = 2.3 * pnorm(f, PExponent(p));
    CHECK(close(lhs, rhs, 1e-11 * std::max(1.0, rhs)));
  }
}

TEST_CASE("pnorm zero-limit continuity") {
  const HermitianOperator f = random_psd(4, 123, PositivityClass::PositiveDefinite);
  const double at_zero = pnorm(f, PExponent::zero_limit());
  for (double p : {1e-6, -1e-6}) {
    const double near = pnorm(f, PExponent(p));
    CHECK(close(near, at_zero, 1e-4 * std::max(1.0, at_zero)));
  }
}

TEST_CASE("pnorm extreme exponents approach the infinities") {
  const HermitianOperator f = diag_operator({4.0, 1.0});
  CHECK(close(pnorm(f, PExponent(1000.0)), 4.0, 0.01 * 4.0));
  CHECK(close(pnorm(f, PExponent(-1000.0)), 1.0, 0.01));
  // overflow-prone eigenvalues stay finite through the log domain
  const HermitianOperator g = diag_operator({1e8, 1e-8});
  CHECK(std::isfinite(pnorm(g, PExponent(1000.0))));
  CHECK(close(pnorm(g, PExponent(1000.0)), 1e8, 0.01 * 1e8));
}

TEST_CASE("pnorm_values matches pnorm on diagonals bitwise") {
  const std::vector<double> vals = {0.3, 2.7, 1.1, 0.05};
  for (double p : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0}) {
    CHECK(pnorm_values(vals, PExponent(p)) == pnorm(diag_operator(vals), PExponent(p)));
  }
}

TEST_CASE("pnorm of zero operator") {
  CHECK(pnorm(diag_operator({0.0, 0.0}), PExponent(0.5)) == 0.0);
  CHECK(pnorm(diag_operator({0.0, 0.0}), PExponent(2.0)) == 0.0);
}
