#include <doctest.h>

#include "bernstein/errors.hpp"
#include "bernstein/extremal.hpp"
#include "bernstein/rootfind.hpp"
#include "oracles.hpp"

using namespace bernstein;

TEST_CASE("objective is 1 on monomials and scale invariant") {
  for (int n = 1; n <= 4; ++n) {
    for (const MeanOrder p : {MeanOrder::zero(), MeanOrder::finite(2.0), MeanOrder::infinity()}) {
      CHECK(ratio_objective(LaurentPolynomial::monomial(n, n), p) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  oracle::Generator gen(61);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPolynomial t = gen.laurent(gen.integer(1, 6));
    const Complex c = gen.gaussian();
    for (const MeanOrder p : {MeanOrder::zero(), MeanOrder::finite(1.0), MeanOrder::infinity()}) {
      const double base = ratio_objective(t, p);
      CHECK(std::abs(ratio_objective(c * t, p) - base) <= 1e-10 * std::max(1.0, base));
      CHECK(base <= 1.0 + kRatioSlack);
    }
  }
  CHECK_THROWS_AS(ratio_objective(LaurentPolynomial::monomial(0, 0), MeanOrder::zero()), InvalidArgument);
  CHECK_THROWS_AS(ratio_objective(LaurentPolynomial(2), MeanOrder::zero()), InvalidArgument);
}

TEST_CASE("a monomial start is already optimal") {
  RatioSearch search;
  search.restarts = 1;
  search.budget = 200;
  search.start = LaurentPolynomial::monomial(3, 3);
  const RatioTrace trace = maximize_ratio(3, MeanOrder::finite(2.0), search);
  REQUIRE_FALSE(trace.history.empty());
  CHECK(trace.history.front().first == 0);
  CHECK(trace.history.front().second == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(trace.best_ratio >= 1.0 - 1e-10);
  CHECK_FALSE(trace.inconsistency);
}

TEST_CASE("search approaches the bound from below") {
  RatioSearch search;
  search.restarts = 4;
  search.budget = 6000;
  search.seed = 5;
  const RatioTrace two = maximize_ratio(2, MeanOrder::finite(2.0), search);
  CHECK(two.best_ratio >= 0.999);
  CHECK(two.max_evaluated_ratio <= 1.0 + kRatioSlack);
  CHECK_FALSE(two.inconsistency);

  search.restarts = 8;
  search.budget = 20000;
  for (const std::uint64_t seed : {0, 5}) {
    search.seed = seed;
    const RatioTrace zero = maximize_ratio(2, MeanOrder::zero(), search);
    CHECK(zero.best_ratio >= 0.995);
    // Near-extremal polynomials have every zero near the closed disk, or (under T(z) -> T(1/z), which keeps
    // the ratio) every zero near the closed exterior.
    const CirclePartition part = classify(laurent_roots(zero.best_poly), 1e-2);
    CHECK((part.outside.empty() || part.inside.empty()));
  }
}

TEST_CASE("trace bookkeeping") {
  RatioSearch search;
  search.restarts = 2;
  search.budget = 500;
  search.seed = 17;
  const RatioTrace a = maximize_ratio(2, MeanOrder::finite(1.0), search);
  const RatioTrace b = maximize_ratio(2, MeanOrder::finite(1.0), search);
  CHECK(a.best_ratio == b.best_ratio);
  CHECK(a.history == b.history);
  CHECK(a.best_poly == b.best_poly);
  CHECK(a.evaluations <= search.restarts * search.budget);
  CHECK(a.best_poly.degree_bound() == 2);
  for (std::size_t k = 1; k < a.history.size(); ++k) {
    CHECK(a.history[k].first > a.history[k - 1].first);
    CHECK(a.history[k].second >= a.history[k - 1].second);
  }
  CHECK(a.history.back().second == a.best_ratio);
  CHECK(a.max_evaluated_ratio >= a.best_ratio);

  search.seed = 18;
  CHECK(maximize_ratio(2, MeanOrder::finite(1.0), search).history != a.history);
}

TEST_CASE("downsampling") {
  std::vector<std::pair<int, double>> h;
  for (int k = 0; k < 1000; ++k) {
    h.emplace_back(k, k * 1e-3);
  }
  const auto d = downsample(h);
  CHECK(d.size() <= 200);
  CHECK(d.front() == h.front());
  CHECK(d.back() == h.back());
  CHECK(downsample(std::vector<std::pair<int, double>>(h.begin(), h.begin() + 50)).size() == 50);
  CHECK(downsample({}).empty());
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(maximize_ratio(0, MeanOrder::zero()), InvalidArgument);
  RatioSearch search;
  search.budget = 10;
  CHECK_THROWS_AS(maximize_ratio(2, MeanOrder::zero(), search), InvalidArgument);
  search.budget = 200;
  search.restarts = 0;
  CHECK_THROWS_AS(maximize_ratio(2, MeanOrder::zero(), search), InvalidArgument);
}
