#pragma once

#include <limits>
#include <string>
#include <string_view>

#include "bernstein/poly.hpp"
#include "bernstein/quadrature.hpp"
#include "bernstein/rootfind.hpp"

namespace bernstein {

/// Extended exponent p in {0} u (0, inf) u {inf}.
class MeanOrder {
public:
  constexpr MeanOrder() = default;
  static constexpr MeanOrder zero() { return MeanOrder(0.0); }
  static constexpr MeanOrder infinity() { return MeanOrder(std::numeric_limits<double>::infinity()); }
  /// Throws InvalidArgument for negative or NaN p.
  static MeanOrder finite(double p);

  constexpr bool is_zero() const noexcept { return p_ == 0.0; }
  constexpr bool is_infinite() const noexcept { return p_ == std::numeric_limits<double>::infinity(); }
  constexpr double value() const noexcept { return p_; }

  friend constexpr auto operator<=>(MeanOrder, MeanOrder) = default;

private:
  constexpr explicit MeanOrder(double p) : p_(p) {}
  double p_ = 0.0;
};

/// Accepts "0", a positive decimal, or "inf". Throws InvalidArgument otherwise.
MeanOrder parse_mean_order(std::string_view token);
std::string to_string(MeanOrder p);

enum class MeanMethod { jensen_product, trapezoid, adaptive_singular, sampled_max };

std::string_view to_string(MeanMethod m);

struct MeanResult {
  MeanOrder p;
  double value = 0.0;
  double err_estimate = 0.0;
  MeanMethod method = MeanMethod::trapezoid;
};

/// Distance from the unit circle below which zeros get singular handling.
inline constexpr double kCircleProximity = 1e-3;

/// |c| prod_k max(1, |z_k|).
MeanResult mahler_from_roots(const RootSet& r);

/// M_0 of a Laurent polynomial through the roots of z^n T(z).
MeanResult mahler_measure(const LaurentPolynomial& t);

/// M_p for finite p > 0. Periodic trapezoid on |T(e^{it})|^p; when T has
/// zeros within kCircleProximity of the circle and |T|^p is not a
/// trigonometric polynomial (p not an even integer), graded Gauss-Legendre
/// panels around those zeros take over.
MeanResult mean_p(const LaurentPolynomial& t, double p, const QuadratureConfig& grid = {});
MeanResult mean_p(const LaurentPolynomial& t, double p, const RootSet& r, const QuadratureConfig& grid);

/// M_0 by direct integration of log|T(e^{it})|, with graded panels around
/// zeros of z^n T lying near the circle. `r` must be the root set of z^n T.
MeanResult mean_0_quadrature(const LaurentPolynomial& t, const RootSet& r, const QuadratureConfig& grid = {});

/// M_inf by uniform sampling followed by golden-section refinement of every
/// sampled local maximum. samples = 0 selects max(8(2n+1), 256); a positive
/// value below 8(2n+1) is rejected.
MeanResult mean_inf(const LaurentPolynomial& t, int samples = 0);

/// Dispatches on p: Jensen product (p = 0), mean_p, or mean_inf.
MeanResult mean(const LaurentPolynomial& t, MeanOrder p, const QuadratureConfig& grid = {});

/// (1/2pi) int_0^{2pi} log+ |T(e^{it})| dt.
double logplus_integral(const LaurentPolynomial& t, const QuadratureConfig& grid = {});

} // namespace bernstein
