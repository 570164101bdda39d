#include <doctest.h>

#include "bernstein/errors.hpp"
#include "bernstein/means.hpp"
#include "oracles.hpp"

using namespace bernstein;

namespace {

LaurentPolynomial z_minus(Complex a) {
  CoeffVector c(3);
  c << 0.0, -a, 1.0;
  return {1, std::move(c)};
}

const std::vector<MeanOrder> kOrders = {MeanOrder::zero(),       MeanOrder::finite(0.25), MeanOrder::finite(0.5),
                                        MeanOrder::finite(1.0),  MeanOrder::finite(2.0),  MeanOrder::finite(3.0),
                                        MeanOrder::finite(4.0),  MeanOrder::infinity()};

} // namespace

TEST_CASE("mean order grammar") {
  CHECK(parse_mean_order("0").is_zero());
  CHECK(parse_mean_order("inf").is_infinite());
  CHECK(parse_mean_order("Inf").is_infinite());
  CHECK(parse_mean_order("0.25").value() == 0.25);
  CHECK(parse_mean_order("+2").value() == 2.0);
  CHECK(parse_mean_order("1e-3").value() == 1e-3);
  CHECK_THROWS_AS(parse_mean_order("-1"), InvalidArgument);
  CHECK_THROWS_AS(parse_mean_order("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_mean_order(""), InvalidArgument);
  CHECK_THROWS_AS(parse_mean_order("2x"), InvalidArgument);
  CHECK(to_string(MeanOrder::infinity()) == "inf");
  CHECK(to_string(MeanOrder::finite(0.25)) == "0.25");
  CHECK(MeanOrder::zero() < MeanOrder::finite(1e-9));
  CHECK(MeanOrder::finite(1e9) < MeanOrder::infinity());
}

TEST_CASE("jensen product formula") {
  RootSet r;
  r.leading = 1.0;
  r.roots = {2.0};
  CHECK(mahler_from_roots(r).value == doctest::Approx(2.0));
  r.leading = 3.0;
  r.roots = {0.5, 0.1};
  CHECK(mahler_from_roots(r).value == doctest::Approx(3.0));
  CHECK(mahler_from_roots(r).method == MeanMethod::jensen_product);

  // (z - 2)(z - 0.5) = z^2 - 2.5 z + 1, viewed as z^{-1}(...) in class 1
  CoeffVector c(3);
  c << 1.0, -2.5, 1.0;
  const LaurentPolynomial t(1, c);
  CHECK(mahler_measure(t).value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(oracle::relative_error(mean_0_quadrature(t, laurent_roots(t)).value, 2.0) < 1e-8);
}

TEST_CASE("means of z - 2") {
  const LaurentPolynomial t = z_minus(2.0);
  CHECK(mean(t, MeanOrder::zero()).value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mean(t, MeanOrder::finite(2.0)).value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(mean(t, MeanOrder::infinity()).value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(oracle::relative_error(mean(t, MeanOrder::finite(1.0)).value, oracle::brute_mean_p(t, 1.0, 1 << 20)) < 1e-8);
  CHECK(mean_0_quadrature(t, laurent_roots(t)).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(logplus_integral(t) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("quadrature survives a zero on the circle") {
  const LaurentPolynomial t = z_minus(1.0);
  const MeanResult m = mean_0_quadrature(t, laurent_roots(t));
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(m.method == MeanMethod::adaptive_singular);
  // M_1(z - 1) = (1/2pi) int |2 sin(t/2)| dt = 4/pi
  CHECK(mean_p(t, 1.0).value == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-10));
  CHECK(mean_p(t, 0.5).method == MeanMethod::adaptive_singular);
}

TEST_CASE("constants and monomials") {
  CoeffVector c = CoeffVector::Zero(5);
  c[2] = Complex(3.0, -4.0);
  const LaurentPolynomial constant(2, c);
  for (const MeanOrder p : kOrders) {
    CHECK(mean(constant, p).value == doctest::Approx(5.0).epsilon(1e-12));
  }
  for (int n = 1; n <= 5; ++n) {
    const LaurentPolynomial zn = LaurentPolynomial::monomial(n, n);
    for (const MeanOrder p : kOrders) {
      CHECK(mean(zn, p).value == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(std::abs(logplus_integral(zn)) < 1e-14);
    CHECK(logplus_integral(Complex(2.0) * zn) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(mean(LaurentPolynomial(2), MeanOrder::finite(1.0)), InvalidArgument);
  CHECK_THROWS_AS(logplus_integral(LaurentPolynomial(2)), InvalidArgument);
  CHECK_THROWS_AS(mean_inf(LaurentPolynomial::monomial(4, 1), 10), InvalidArgument);
}

TEST_CASE("z + 1/z") {
  CoeffVector c(3);
  c << 1.0, 0.0, 1.0;
  const LaurentPolynomial t(1, c);
  CHECK(mean(t, MeanOrder::finite(2.0)).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(mean(t, MeanOrder::infinity()).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mean(t, MeanOrder::zero()).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Parseval oracle") {
  oracle::Generator gen(31);
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentPolynomial t = gen.laurent(gen.integer(0, 16));
    CHECK(oracle::relative_error(mean(t, MeanOrder::finite(2.0)).value, oracle::parseval(t)) < 1e-12);
  }
}

TEST_CASE("M_p agrees with brute force away from circle zeros") {
  oracle::Generator gen(32);
  for (int trial = 0; trial < 6; ++trial) {
    const LaurentPolynomial t = oracle::from_planted(gen.gaussian(), gen.off_circle_roots(2 * gen.integer(1, 5), 0.1));
    for (const double p : {0.25, 1.0, 3.0}) {
      CHECK(oracle::relative_error(mean_p(t, p).value, oracle::brute_mean_p(t, p)) < 1e-9);
    }
  }
}

TEST_CASE("Jensen product against planted roots and quadrature") {
  oracle::Generator gen(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.integer(1, 16);
    const std::vector<Complex> planted = gen.off_circle_roots(2 * n, 0.1);
    const Complex c = gen.gaussian();
    const LaurentPolynomial t = oracle::from_planted(c, planted);
    const RootSet r = laurent_roots(t);
    const double reference = oracle::planted_mahler(c, planted);
    CHECK(oracle::relative_error(mahler_from_roots(r).value, reference) < 1e-10);
    CHECK(oracle::relative_error(mean_0_quadrature(t, r).value, reference) < 1e-10);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const int n = gen.integer(1, 16);
    std::vector<Complex> planted;
    for (int k = 0; k < 2 * n; ++k) {
      planted.push_back(std::polar(1.0, gen.uniform(0.0, oracle::kTwoPi)));
    }
    const Complex c = gen.gaussian();
    const LaurentPolynomial t = oracle::from_planted(c, planted);
    const RootSet r = laurent_roots(t);
    const double quad = mean_0_quadrature(t, r).value;
    CHECK(oracle::relative_error(quad, std::abs(c)) < 1e-6);
    CHECK(oracle::relative_error(mahler_from_roots(r).value, quad) < 1e-6);
  }
}

TEST_CASE("power means are nondecreasing in p") {
  oracle::Generator gen(34);
  for (int trial = 0; trial < 15; ++trial) {
    const LaurentPolynomial t = gen.laurent(gen.integer(1, 10));
    double previous = 0.0;
    for (const MeanOrder p : kOrders) {
      const double value = mean(t, p).value;
      CHECK(value >= previous - 1e-9);
      previous = value;
    }
  }
}

TEST_CASE("limits p -> 0 and p -> inf") {
  oracle::Generator gen(35);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPolynomial t = oracle::from_planted(gen.gaussian(), gen.off_circle_roots(2 * gen.integer(1, 8), 0.05));
    const double m0 = mean(t, MeanOrder::zero()).value;
    CHECK(oracle::relative_error(mean_p(t, 1e-3).value, m0) <= 1e-2);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPolynomial t = gen.laurent(gen.integer(1, 8));
    const double inf = mean_inf(t).value;
    const double gap64 = (inf - mean_p(t, 64.0).value) / inf;
    const double gap1024 = (inf - mean_p(t, 1024.0).value) / inf;
    CHECK(gap64 >= -1e-9);
    CHECK(gap1024 <= gap64);
    CHECK(gap1024 <= 1e-2);
  }
}

TEST_CASE("scale equivariance and rotation invariance") {
  oracle::Generator gen(36);
  const LaurentPolynomial t = gen.laurent(6);
  const Complex c = gen.gaussian();
  const double theta = 0.7;
  CoeffVector rotated = t.coeffs();
  for (int j = -6; j <= 6; ++j) {
    rotated[j + 6] *= std::polar(1.0, j * theta);
  }
  const LaurentPolynomial r(6, rotated);
  for (const MeanOrder p : kOrders) {
    const double base = mean(t, p).value;
    CHECK(oracle::relative_error(mean(c * t, p).value, std::abs(c) * base) < 1e-10);
    CHECK(oracle::relative_error(mean(r, p).value, base) < 1e-9);
  }
}

TEST_CASE("M_0 is multiplicative") {
  oracle::Generator gen(37);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraicPolynomial p = from_roots(gen.gaussian(), gen.separated_roots(gen.integer(1, 8), 0.1, 3.0, 1e-2));
    const AlgebraicPolynomial q = from_roots(gen.gaussian(), gen.separated_roots(gen.integer(1, 8), 0.1, 3.0, 1e-2));
    const double product = mahler_from_roots(roots(multiply(p, q))).value;
    CHECK(oracle::relative_error(product, mahler_from_roots(roots(p)).value * mahler_from_roots(roots(q)).value) <
          1e-10);
  }
}

TEST_CASE("log+ integral against brute force") {
  oracle::Generator gen(38);
  for (int trial = 0; trial < 8; ++trial) {
    const LaurentPolynomial t = Complex(0.5) * gen.laurent(gen.integer(1, 6));
    const double reference = oracle::brute_circle_mean(
        [&](double s) { return std::max(0.0, std::log(std::abs(oracle::naive_eval(t, std::polar(1.0, s))))); },
        1 << 20);
    CHECK(std::abs(logplus_integral(t) - reference) < 1e-8);
  }
  CoeffVector c = CoeffVector::Zero(3);
  c[1] = 0.5;
  CHECK(logplus_integral(LaurentPolynomial(1, c)) == 0.0);
}

TEST_CASE("log+ integral sees dips below 1 narrower than its grid") {
  oracle::Generator gen(40);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = gen.integer(2, 8);
    std::vector<Complex> planted = gen.off_circle_roots(2 * n - 1, 0.2);
    // one zero just inside the circle cuts a narrow hole into an otherwise large |T|
    planted.push_back(std::polar(1.0 - gen.uniform(1e-3, 1e-2), gen.uniform(0.0, oracle::kTwoPi)));
    const LaurentPolynomial t = oracle::from_planted(Complex(3.0) * gen.gaussian(), planted);
    const double reference = oracle::brute_circle_mean(
        [&](double s) { return std::max(0.0, std::log(std::abs(oracle::naive_eval(t, std::polar(1.0, s))))); },
        1 << 20);
    CHECK(std::abs(logplus_integral(t) - reference) < 1e-8);
  }
}

TEST_CASE("error estimates are reported") {
  oracle::Generator gen(39);
  const LaurentPolynomial t = gen.laurent(5);
  const MeanResult inf = mean_inf(t);
  CHECK(inf.method == MeanMethod::sampled_max);
  CHECK(inf.err_estimate >= 0.0);
  CHECK(inf.err_estimate < 1e-6);
  CHECK(mean_p(t, 1.5).err_estimate < 1e-8 * mean_p(t, 1.5).value);
}
