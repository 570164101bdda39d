#pragma once

#include <cstdint>
#include <vector>

#include "bernstein/poly.hpp"

namespace bernstein {

/// Zeros of an algebraic polynomial in factored form  c * prod_k (z - z_k).
struct RootSet {
  Complex leading{1.0};
  std::vector<Complex> roots;
  /// Number of exactly-zero high-order coefficients stripped before solving.
  int degree_deficit = 0;
};

struct CirclePartition {
  std::vector<Complex> inside;   // |z| < 1 - eps
  std::vector<Complex> on;       // ||z| - 1| <= eps
  std::vector<Complex> outside;  // |z| > 1 + eps
  double epsilon = 0.0;
};

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr double kDefaultCircleEpsilon = 1e-9;

struct AberthOptions {
  int max_iterations = 500;
  int restarts = 4;
  std::uint64_t seed = 0x5eed;
};

/// All zeros of p by Aberth-Ehrlich simultaneous iteration.
///
/// Leading zero coefficients are stripped (counted in degree_deficit) and
/// trailing zero coefficients become exact roots at the origin. A root is
/// accepted once its Weierstrass correction |p(z_k)| / (|c| prod_{j!=k} |z_k - z_j|)
/// is at most tol * max(1, |z_k|), or once |p(z_k)| has reached the rounding
/// floor of Horner evaluation. Converged roots are then polished by a few
/// Aberth sweeps in extended precision. Throws InvalidArgument for the zero polynomial
/// and NumericFailure when restarts are exhausted.
RootSet roots(const AlgebraicPolynomial& p, double tol = kDefaultRootTolerance, const AberthOptions& options = {});

/// Roots of z^{n+1} T'(z), polished against the exact coefficients j a_j
/// rather than their double roundings.
RootSet derivative_roots(const LaurentPolynomial& t, double tol = kDefaultRootTolerance);
/// Roots of z^n T(z).
RootSet laurent_roots(const LaurentPolynomial& t, double tol = kDefaultRootTolerance);

/// Expands the root set back to coefficient form.
AlgebraicPolynomial expand(const RootSet& r);

CirclePartition classify(const RootSet& r, double epsilon = kDefaultCircleEpsilon);

/// min_k ||z_k| - 1|; +inf for an empty root set.
double circle_distance(const RootSet& r);

} // namespace bernstein
