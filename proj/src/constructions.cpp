#include "bernstein/constructions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bernstein/errors.hpp"
#include "bernstein/quadrature.hpp"

namespace bernstein {

ReflectionOutput reflect_outside(const LaurentPolynomial& t, const RootSet& r, double eps, int test_points) {
  const int n = t.degree_bound();
  if (t.leading() == 0.0) {
    const LaurentPolynomial reduced = deflate(t);
    if (reduced.leading() == 0.0) {
      throw InvalidArgument("reflection needs a_n != 0 in the effective class");
    }
    ReflectionOutput out = reflect_outside(reduced, laurent_roots(reduced), eps, test_points);
    out.v = widen(out.v, n);
    return out;
  }
  if (r.degree_deficit != 0 || static_cast<int>(r.roots.size()) != 2 * n) {
    throw InconsistencyError("root set has " + std::to_string(r.roots.size()) + " zeros, expected " +
                             std::to_string(2 * n));
  }

  ReflectionOutput out{t, 0, 0.0};
  CoeffVector acc = CoeffVector::Constant(1, t.leading());
  for (const Complex z : r.roots) {
    CoeffVector factor(2);
    if (std::abs(z) > 1.0 + eps) {
      factor << 1.0, -std::conj(z);
      ++out.m;
    } else {
      factor << -z, 1.0;
    }
    acc = multiply(AlgebraicPolynomial(acc), AlgebraicPolynomial(factor)).coeffs();
  }
  if (out.m > 0) {
    out.v = from_algebraic(AlgebraicPolynomial(acc), n);
  }
  out.modulus_discrepancy = (circle_moduli(out.v, test_points) - circle_moduli(t, test_points)).abs().maxCoeff();
  return out;
}

ReflectionOutput reflect_outside(const LaurentPolynomial& t, double eps) {
  if (t.leading() == 0.0) {
    return reflect_outside(t, RootSet{}, eps);
  }
  return reflect_outside(t, laurent_roots(t), eps);
}

LaurentPolynomial perturb_by_en(const LaurentPolynomial& t, Complex w) {
  if (std::abs(std::abs(w) - 1.0) > 1e-12) {
    throw InvalidArgument("perturbation weight must lie on the unit circle");
  }
  const int n = t.degree_bound();
  CoeffVector c = t.coeffs();
  c[2 * n] += w;
  return {n, std::move(c)};
}

double smoothed_logplus(Complex v, int nodes) {
  if (nodes < 16) {
    throw InvalidArgument("smoothed_logplus needs at least 16 nodes");
  }
  const auto integrand = [v](const Eigen::ArrayXd& s) -> Eigen::ArrayXd {
    const Eigen::ArrayXcd w = (Complex(0.0, 1.0) * s.cast<Complex>()).exp();
    return (w + v).abs().max(1e-300).log();
  };
  if (std::abs(std::abs(v) - 1.0) < 1e-3) {
    const Complex pole[] = {-v};
    return graded_circle_mean(integrand, {std::arg(-v)}, circle_preimages(pole)).value;
  }
  const QuadratureConfig config{nodes, 1 << 22, 1e-14};
  return periodic_trapezoid_mean(integrand, config, 1.0).value;
}

double mu_moment(double u, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw InvalidArgument("mu_moment needs p > 0");
  }
  if (!(u >= 0.0)) {
    throw InvalidArgument("mu_moment needs u >= 0");
  }
  if (u == 0.0) {
    return 0.0;
  }
  // a = u exp(-s/p) maps (0, u] onto [0, inf) and |da/ds| = a/p, so the
  // measure p^2 a^{p-1} da becomes p a^p ds; the support of log+(u/a) is a <= u.
  const auto integrand = [u, p](const Eigen::ArrayXd& s) -> Eigen::ArrayXd {
    const Eigen::ArrayXd a = u * (-s / p).exp();
    const Eigen::ArrayXd logplus = (u / a).log().max(0.0);
    return logplus * p * p * a.pow(p - 1.0) * (a / p);
  };
  constexpr double kCutoff = 50.0;
  const double rough = panel_rule().integrate(integrand, 0.0, kCutoff);
  return adaptive_gauss(integrand, 0.0, kCutoff, 1e-16 * std::abs(rough)).value;
}

} // namespace bernstein
