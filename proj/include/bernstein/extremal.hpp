#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bernstein/means.hpp"
#include "bernstein/poly.hpp"

namespace bernstein {

/// Evaluated ratios above 1 + kRatioSlack flag a numerical inconsistency.
inline constexpr double kRatioSlack = 1e-6;

struct RatioTrace {
  int n = 1;
  MeanOrder p;
  double best_ratio = 0.0;
  LaurentPolynomial best_poly;
  /// Nelder-Mead iterations summed over restarts.
  int iterations = 0;
  int evaluations = 0;
  /// (evaluation index, best ratio so far); nondecreasing in the ratio.
  std::vector<std::pair<int, double>> history;
  double max_evaluated_ratio = 0.0;
  bool inconsistency = false;
};

/// M_p(T') / (n M_p(T)) for T of class n >= 1. Invariant under T -> cT.
double ratio_objective(const LaurentPolynomial& t, MeanOrder p);

struct RatioSearch {
  int restarts = 8;
  /// Objective evaluations per restart; at least 100.
  int budget = 20000;
  std::uint64_t seed = 0;
  /// Replaces the random start of the first restart.
  std::optional<LaurentPolynomial> start;
};

/// Nelder-Mead (dimension-adaptive coefficients) over the 2(2n+1) real
/// coefficients; each point is normalized to the unit coefficient sphere before evaluation.
/// Iterates with M_p(T) < 1e-12 are replaced by fresh random points. Throws
/// NumericFailure when every restart degenerates.
RatioTrace maximize_ratio(int n, MeanOrder p, const RatioSearch& search = {});

/// History thinned to at most `points` entries, keeping the first and last.
std::vector<std::pair<int, double>> downsample(const std::vector<std::pair<int, double>>& history, int points = 200);

} // namespace bernstein
