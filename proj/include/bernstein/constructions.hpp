#pragma once

#include "bernstein/poly.hpp"
#include "bernstein/rootfind.hpp"

namespace bernstein {

struct ReflectionOutput {
  LaurentPolynomial v;
  /// Number of zeros moved from outside the closed disk to inside it.
  int m = 0;
  /// max over the test grid of ||V(z)| - |T(z)||.
  double modulus_discrepancy = 0.0;
};

/// Replaces every factor (z - z_j) of z^n T with |z_j| > 1 + eps by
/// (1 - conj(z_j) z), keeping a_n and the remaining factors. Zeros within the
/// eps band of the circle stay put. The result has |V| = |T| on the circle and
/// z^n V has every zero in the closed disk.
///
/// `r` must be the root set of z^n T. Throws InvalidArgument when a_n = 0 and
/// InconsistencyError when `r` does not hold exactly 2n finite zeros.
ReflectionOutput reflect_outside(const LaurentPolynomial& t, const RootSet& r, double eps = kDefaultCircleEpsilon,
                                 int test_points = 4096);

/// Convenience overload computing the roots itself.
ReflectionOutput reflect_outside(const LaurentPolynomial& t, double eps = kDefaultCircleEpsilon);

/// T + w z^n for |w| = 1.
LaurentPolynomial perturb_by_en(const LaurentPolynomial& t, Complex w);

/// (1/2pi) int_0^{2pi} log|v + e^{is}| ds, which equals log+ |v|.
/// `nodes` is the starting trapezoid size; refinement doubles it as needed.
double smoothed_logplus(Complex v, int nodes = 64);

/// int_0^u log+(u/a) p^2 a^{p-1} da, which equals u^p.
double mu_moment(double u, double p);

} // namespace bernstein
