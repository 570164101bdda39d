#include <doctest.h>

#include "bernstein/constructions.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/means.hpp"
#include "oracles.hpp"

using namespace bernstein;

TEST_CASE("reflecting z - 2") {
  CoeffVector c(3);
  c << 0.0, -2.0, 1.0;
  const LaurentPolynomial t(1, c);
  const ReflectionOutput out = reflect_outside(t);
  CHECK(out.m == 1);
  // hand expansion: z^{-1} (z - 0)(1 - 2z) = 1 - 2z
  CHECK(std::abs(out.v.coeff(-1)) < 1e-14);
  CHECK(std::abs(out.v.coeff(0) - 1.0) < 1e-14);
  CHECK(std::abs(out.v.coeff(1) + 2.0) < 1e-14);
  for (int k = 0; k < 256; ++k) {
    const Complex z = std::polar(1.0, oracle::kTwoPi * k / 256);
    CHECK(std::abs(std::abs(oracle::naive_eval(out.v, z)) - std::abs(oracle::naive_eval(t, z))) < 1e-13);
  }
}

TEST_CASE("nothing to reflect leaves T unchanged") {
  oracle::Generator gen(41);
  std::vector<Complex> inside;
  for (int k = 0; k < 6; ++k) {
    inside.push_back(gen.root_with_modulus(0.0, 0.9));
  }
  const LaurentPolynomial t = oracle::from_planted(gen.gaussian(), inside);
  const ReflectionOutput out = reflect_outside(t);
  CHECK(out.m == 0);
  CHECK(out.v == t);
}

TEST_CASE("reflection keeps circle moduli and M_0") {
  oracle::Generator gen(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = gen.integer(1, 16);
    const LaurentPolynomial t = gen.laurent(n);
    const ReflectionOutput out = reflect_outside(t);
    const double sup = mean_inf(t).value;
    CHECK(out.modulus_discrepancy <= 1e-8 * sup);
    const Eigen::ArrayXd diff = (circle_moduli(out.v, 4096) - circle_moduli(t, 4096)).abs();
    CHECK(diff.maxCoeff() <= 1e-8 * sup);
    CHECK(oracle::relative_error(mahler_measure(out.v).value, mahler_measure(t).value) < 1e-8);
    CHECK(classify(laurent_roots(out.v), 1e-6).outside.empty());

    // idempotent
    const ReflectionOutput again = reflect_outside(out.v);
    CHECK((again.v.coeffs() - out.v.coeffs()).cwiseAbs().maxCoeff() <= 1e-10 * out.v.max_abs_coeff());
  }
}

TEST_CASE("reflection with planted outside roots") {
  oracle::Generator gen(43);
  std::vector<Complex> planted;
  for (int k = 0; k < 3; ++k) {
    planted.push_back(gen.root_with_modulus(1.5, 3.0));
  }
  for (int k = 0; k < 5; ++k) {
    planted.push_back(gen.root_with_modulus(0.0, 0.8));
  }
  const Complex c = gen.gaussian();
  const LaurentPolynomial t = oracle::from_planted(c, planted);
  const ReflectionOutput out = reflect_outside(t);
  CHECK(out.m == 3);
  double chain = std::abs(c);
  for (int k = 0; k < 3; ++k) {
    chain *= std::abs(planted[static_cast<std::size_t>(k)]);
  }
  CHECK(oracle::relative_error(mahler_measure(out.v).value, chain) < 1e-8);
  CHECK(oracle::relative_error(std::abs(out.v.leading()), chain) < 1e-8);
}

TEST_CASE("reflection edge cases") {
  // a_n = 0 in the stored class, but the effective class has a_1 != 0
  CoeffVector c = CoeffVector::Zero(5);
  c[2] = -2.0;
  c[3] = 1.0;  // T = z - 2 in class 2
  const LaurentPolynomial t(2, c);
  const ReflectionOutput out = reflect_outside(t);
  CHECK(out.v.degree_bound() == 2);
  CHECK(out.modulus_discrepancy < 1e-13);

  CoeffVector d = CoeffVector::Zero(5);
  d[1] = -2.0;
  d[2] = 1.0;  // T = 1 - 2/z: a_1 = 0 even after deflation
  CHECK_THROWS_AS(reflect_outside(LaurentPolynomial(2, d)), InvalidArgument);

  CoeffVector e(3);
  e << 1.0, 0.0, 1.0;
  RootSet wrong;
  wrong.roots = {1.0};
  CHECK_THROWS_AS(reflect_outside(LaurentPolynomial(1, e), wrong), InconsistencyError);
}

TEST_CASE("perturbation by w z^n") {
  const LaurentPolynomial zero(3);
  CHECK(perturb_by_en(zero, 1.0) == LaurentPolynomial::monomial(3, 3));
  CHECK(perturb_by_en(LaurentPolynomial::monomial(3, 3), -1.0).is_zero());
  CHECK_THROWS_AS(perturb_by_en(zero, 2.0), InvalidArgument);
}

TEST_CASE("smoothed log+") {
  CHECK(std::abs(smoothed_logplus(0.5)) < 1e-14);
  CHECK(smoothed_logplus(2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(std::abs(smoothed_logplus(1.0)) < 1e-10);
  CHECK_THROWS_AS(smoothed_logplus(2.0, 8), InvalidArgument);

  oracle::Generator gen(44);
  for (int trial = 0; trial < 100; ++trial) {
    const double modulus = trial % 4 == 0 ? 1.0 + gen.uniform(-1e-3, 1e-3) : std::exp(gen.uniform(-5.0, 5.0));
    const Complex v = std::polar(modulus, gen.uniform(0.0, oracle::kTwoPi));
    const double tol = std::abs(modulus - 1.0) < 1e-3 ? 1e-4 : 1e-8;
    CHECK(std::abs(smoothed_logplus(v) - std::max(0.0, std::log(modulus))) <= tol);
    CHECK(std::abs(smoothed_logplus(v * std::polar(1.0, 1.3)) - smoothed_logplus(v)) <= 1e-10);
  }
}

TEST_CASE("layer-cake moment") {
  CHECK(mu_moment(0.0, 2.0) == 0.0);
  CHECK(mu_moment(1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mu_moment(2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(mu_moment(1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(mu_moment(-1.0, 1.0), InvalidArgument);
  for (const double p : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (int k = 0; k <= 30; ++k) {
      const double u = std::pow(10.0, -3.0 + 0.2 * k);
      CHECK(std::abs(mu_moment(u, p) / std::pow(u, p) - 1.0) <= 1e-8);
    }
  }
}
