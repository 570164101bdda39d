#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <numbers>
#include <vector>

#include <Eigen/Core>

namespace bernstein {

/// Trapezoid refinement schedule shared by the means and the CLI.
struct QuadratureConfig {
  int start_nodes = 64;
  int max_nodes = 1 << 20;
  double rel_tol = 1e-10;
};

/// Throws InvalidArgument unless start_nodes >= 16, max_nodes >= start_nodes and rel_tol > 0.
void validate(const QuadratureConfig& config);

struct Integral {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

/// Gauss-Legendre rule on [-1, 1] (Golub-Welsch, Newton-polished).
class GaussLegendre {
public:
  explicit GaussLegendre(int order);

  const Eigen::ArrayXd& nodes() const noexcept { return nodes_; }
  const Eigen::ArrayXd& weights() const noexcept { return weights_; }

  /// Nodes mapped onto [a, b].
  Eigen::ArrayXd nodes_on(double a, double b) const { return 0.5 * (b - a) * nodes_ + 0.5 * (a + b); }

  template <typename F>
  double integrate(F&& f, double a, double b) const {
    return 0.5 * (b - a) * (weights_ * f(nodes_on(a, b))).sum();
  }

private:
  Eigen::ArrayXd nodes_;
  Eigen::ArrayXd weights_;
};

/// Shared 20-point rule used by every panel method.
const GaussLegendre& panel_rule();

namespace detail {

template <typename F>
Integral adaptive_panel(F& f, double a, double b, double whole, double density_tol, int depth) {
  const GaussLegendre& rule = panel_rule();
  const double mid = 0.5 * (a + b);
  const double left = rule.integrate(f, a, mid);
  const double right = rule.integrate(f, mid, b);
  const int evals = 2 * static_cast<int>(rule.nodes().size());
  const double diff = std::abs(left + right - whole);
  if (diff <= density_tol * (b - a) || depth <= 0) {
    return {left + right, diff, evals};
  }
  Integral l = adaptive_panel(f, a, mid, left, density_tol, depth - 1);
  Integral r = adaptive_panel(f, mid, b, right, density_tol, depth - 1);
  return {l.value + r.value, l.error + r.error, l.evaluations + r.evaluations + evals};
}

} // namespace detail

/// Adaptive bisection of Gauss-Legendre panels on [a, b] until each panel's
/// one-level refinement changes it by at most density_tol * width.
template <typename F>
Integral adaptive_gauss(F&& f, double a, double b, double density_tol, int max_depth = 30) {
  const double whole = panel_rule().integrate(f, a, b);
  Integral r = detail::adaptive_panel(f, a, b, whole, density_tol, max_depth);
  r.evaluations += static_cast<int>(panel_rule().nodes().size());
  return r;
}

/// Mean (1/2pi) int_0^{2pi} f(t) dt of a smooth periodic integrand by the
/// trapezoid rule, doubling from start_nodes until two successive means differ
/// by at most rel_tol * max(scale_floor, |mean|), or max_nodes is reached.
/// `min_nodes` defers the convergence test for integrands of known bandwidth.
/// f maps an array of angles to an array of values.
template <typename F>
Integral periodic_trapezoid_mean(F&& f, const QuadratureConfig& config, double scale_floor, int min_nodes = 0) {
  int nodes = config.start_nodes;
  const auto angles_at = [](int count, int offset_halves) {
    const double h = 2.0 * std::numbers::pi / count;
    return Eigen::ArrayXd(Eigen::ArrayXd::LinSpaced(count, 0.0, h * (count - 1)) + 0.5 * h * offset_halves);
  };
  double sum = f(angles_at(nodes, 0)).sum();
  double mean = sum / nodes;
  Integral out{mean, std::abs(mean), nodes};
  while (nodes < config.max_nodes) {
    // new nodes are the midpoints of the current grid
    sum += f(angles_at(nodes, 1)).sum();
    out.evaluations += nodes;
    nodes *= 2;
    const double refined = sum / nodes;
    out.error = std::abs(refined - mean);
    mean = refined;
    out.value = mean;
    if (nodes >= min_nodes && out.error <= config.rel_tol * std::max(scale_floor, std::abs(mean))) {
      break;
    }
  }
  return out;
}

/// Angles t with e^{it} = z for every nonzero z: the complex singularities of
/// t -> log|T(e^{it})| and t -> |T(e^{it})|^p when z ranges over the zeros of z^n T.
/// Real parts are reduced to [0, 2pi).
std::vector<std::complex<double>> circle_preimages(std::span<const std::complex<double>> zeros);

/// Bernstein-ellipse parameter of the point tau relative to the segment [a, b].
double ellipse_parameter(double a, double b, std::complex<double> tau);

/// Panels whose nearest singularity sits on an ellipse smaller than this are bisected.
inline constexpr double kMinEllipse = 2.2;

namespace detail {

inline double nearest_ellipse(double a, double b, std::span<const std::complex<double>> singularities) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double rho = std::numeric_limits<double>::infinity();
  for (const auto tau : singularities) {
    for (const double shift : {-two_pi, 0.0, two_pi, 2.0 * two_pi}) {
      rho = std::min(rho, ellipse_parameter(a, b, tau + shift));
    }
  }
  return rho;
}

template <typename F>
void split_panel(F& f, double a, double b, std::span<const std::complex<double>> singularities, Integral& total) {
  const double rho = nearest_ellipse(a, b, singularities);
  if (rho < kMinEllipse && b - a > 1e-14) {
    const double mid = 0.5 * (a + b);
    split_panel(f, a, mid, singularities, total);
    split_panel(f, mid, b, singularities, total);
    return;
  }
  const GaussLegendre& rule = panel_rule();
  const Eigen::ArrayXd values = f(rule.nodes_on(a, b));
  const double piece = 0.5 * (b - a) * (rule.weights() * values).sum();
  total.value += piece;
  total.evaluations += static_cast<int>(values.size());
  // Gauss-Legendre error for a function analytic inside the rho-ellipse decays like rho^{-2m}.
  const double decay = std::isfinite(rho) ? std::pow(rho, -2.0 * static_cast<double>(values.size())) : 0.0;
  total.error += (b - a) * values.abs().maxCoeff() * decay;
}

} // namespace detail

/// Integral over [a, b] with Gauss-Legendre panels bisected until every
/// listed complex singularity lies outside the kMinEllipse Bernstein ellipse
/// of its panel.
template <typename F>
Integral singularity_aware_gauss(F&& f, double a, double b, std::span<const std::complex<double>> singularities) {
  Integral total;
  detail::split_panel(f, a, b, singularities, total);
  return total;
}

/// Mean over the circle of an integrand with integrable singularities (or
/// near-singularities) at the given real angles. Each arc between consecutive
/// singular angles is split at its midpoint and each half is covered by
/// Gauss-Legendre panels shrinking geometrically toward its singular end.
/// Panels are further bisected around the complex `singularities`
/// (see singularity_aware_gauss).
template <typename F>
Integral graded_circle_mean(F&& f, std::vector<double> singular_angles,
                            std::span<const std::complex<double>> singularities) {
  constexpr double kGrading = 0.15;
  constexpr double kInnermost = 1e-15;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  for (double& s : singular_angles) {
    s = std::fmod(s, two_pi);
    if (s < 0.0) {
      s += two_pi;
    }
  }
  std::sort(singular_angles.begin(), singular_angles.end());
  singular_angles.erase(std::unique(singular_angles.begin(), singular_angles.end(),
                                    [](double x, double y) { return y - x < 1e-14; }),
                        singular_angles.end());

  const GaussLegendre& rule = panel_rule();
  Integral total;

  // Graded cover of the segment between s and s + dir * h, singular at s.
  const auto graded_half = [&](double s, double h, double dir) {
    double outer = h;
    while (outer > kInnermost * std::max(h, 1.0)) {
      const double inner = outer * kGrading;
      const double a = std::min(s + dir * inner, s + dir * outer);
      const double b = std::max(s + dir * inner, s + dir * outer);
      detail::split_panel(f, a, b, singularities, total);
      outer = inner;
    }
    const double a = std::min(s, s + dir * outer);
    const double b = std::max(s, s + dir * outer);
    const double piece = rule.integrate(f, a, b);
    total.value += piece;
    total.error += std::abs(piece);
    total.evaluations += static_cast<int>(rule.nodes().size());
  };

  const std::size_t count = singular_angles.size();
  for (std::size_t i = 0; i < count; ++i) {
    const double start = singular_angles[i];
    const double end = (i + 1 < count) ? singular_angles[i + 1] : singular_angles[0] + two_pi;
    const double half = 0.5 * (end - start);
    if (half <= 0.0) {
      continue;
    }
    graded_half(start, half, +1.0);
    graded_half(end, half, -1.0);
  }
  total.value /= two_pi;
  total.error /= two_pi;
  return total;
}

} // namespace bernstein
