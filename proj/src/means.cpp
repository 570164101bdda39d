#include "bernstein/means.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTinyModulus = 1e-300;

void require_nonzero(const LaurentPolynomial& t) {
  if (t.is_zero()) {
    throw InvalidArgument("means are undefined for the zero polynomial");
  }
}

bool is_even_integer(double p) { return p == std::round(p) && std::fmod(p, 2.0) == 0.0; }

std::vector<double> near_circle_angles(const RootSet& r) {
  std::vector<double> angles;
  for (const Complex z : r.roots) {
    if (std::abs(std::abs(z) - 1.0) < kCircleProximity) {
      angles.push_back(std::arg(z));
    }
  }
  return angles;
}

// Grid size needed before trusting the trapezoid refinement test.
int bandwidth_nodes(const LaurentPolynomial& t) { return 8 * (2 * t.degree_bound() + 1); }

} // namespace

MeanOrder MeanOrder::finite(double p) {
  if (!(p >= 0.0)) {
    throw InvalidArgument("mean order must be nonnegative");
  }
  return MeanOrder(p);
}

MeanOrder parse_mean_order(std::string_view token) {
  if (token == "inf" || token == "Inf" || token == "INF" || token == "infinity") {
    return MeanOrder::infinity();
  }
  double p = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, p);
  if (ec != std::errc() || ptr != last || !std::isfinite(p) || p < 0.0) {
    throw InvalidArgument("mean order must be 0, a positive decimal, or inf: '" + std::string(token) + "'");
  }
  return MeanOrder::finite(p);
}

std::string to_string(MeanOrder p) {
  if (p.is_infinite()) {
    return "inf";
  }
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p.value());
  return std::string(buf, ptr);
}

std::string_view to_string(MeanMethod m) {
  switch (m) {
  case MeanMethod::jensen_product:
    return "jensen-product";
  case MeanMethod::trapezoid:
    return "trapezoid";
  case MeanMethod::adaptive_singular:
    return "adaptive-singular";
  case MeanMethod::sampled_max:
    return "sampled-max";
  }
  return "unknown";
}

MeanResult mahler_from_roots(const RootSet& r) {
  if (r.leading == 0.0) {
    throw InvalidArgument("root set has zero leading coefficient");
  }
  double value = std::abs(r.leading);
  for (const Complex z : r.roots) {
    value *= std::max(1.0, std::abs(z));
  }
  const double err = value * 1e-14 * static_cast<double>(r.roots.size() + 1);
  return {MeanOrder::zero(), value, err, MeanMethod::jensen_product};
}

MeanResult mahler_measure(const LaurentPolynomial& t) {
  require_nonzero(t);
  return mahler_from_roots(laurent_roots(t));
}

MeanResult mean_p(const LaurentPolynomial& t, double p, const QuadratureConfig& grid) {
  require_nonzero(t);
  if (is_even_integer(p)) {
    // |T|^p is a trigonometric polynomial; the root set is never consulted.
    return mean_p(t, p, RootSet{}, grid);
  }
  return mean_p(t, p, laurent_roots(t), grid);
}

MeanResult mean_p(const LaurentPolynomial& t, double p, const RootSet& r, const QuadratureConfig& grid) {
  require_nonzero(t);
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw InvalidArgument("mean_p needs a finite p > 0");
  }
  validate(grid);
  const auto integrand = [&t, p](const Eigen::ArrayXd& angles) -> Eigen::ArrayXd {
    return eval_on_circle(t, angles).abs().pow(p);
  };

  Integral power;
  MeanMethod method = MeanMethod::trapezoid;
  const std::vector<double> singular = is_even_integer(p) ? std::vector<double>{} : near_circle_angles(r);
  if (singular.empty()) {
    power = periodic_trapezoid_mean(integrand, grid, 0.0, bandwidth_nodes(t) * static_cast<int>(std::ceil(std::max(p, 1.0))));
  } else {
    power = graded_circle_mean(integrand, singular, circle_preimages(r.roots));
    method = MeanMethod::adaptive_singular;
  }
  const double value = std::pow(power.value, 1.0 / p);
  const double err = value * (power.error / std::max(power.value, kTinyModulus)) / p;
  return {MeanOrder::finite(p), value, err, method};
}

MeanResult mean_0_quadrature(const LaurentPolynomial& t, const RootSet& r, const QuadratureConfig& grid) {
  require_nonzero(t);
  validate(grid);
  const auto integrand = [&t](const Eigen::ArrayXd& angles) -> Eigen::ArrayXd {
    return eval_on_circle(t, angles).abs().max(kTinyModulus).log();
  };
  const std::vector<double> singular = near_circle_angles(r);
  Integral logmean;
  MeanMethod method = MeanMethod::adaptive_singular;
  if (singular.empty()) {
    logmean = periodic_trapezoid_mean(integrand, grid, 1.0, bandwidth_nodes(t));
    method = MeanMethod::trapezoid;
  } else {
    logmean = graded_circle_mean(integrand, singular, circle_preimages(r.roots));
  }
  const double value = std::exp(logmean.value);
  return {MeanOrder::zero(), value, value * logmean.error, method};
}

MeanResult mean_inf(const LaurentPolynomial& t, int samples) {
  const int n = t.degree_bound();
  const int floor = 8 * (2 * n + 1);
  if (samples == 0) {
    samples = std::max(floor, 256);
  } else if (samples < floor) {
    throw InvalidArgument("mean_inf needs at least 8(2n+1) samples");
  }
  if (t.is_zero()) {
    return {MeanOrder::infinity(), 0.0, 0.0, MeanMethod::sampled_max};
  }

  const double h = kTwoPi / samples;
  const Eigen::ArrayXd coarse = circle_moduli(t, samples);
  Eigen::Index best_index = 0;
  const double coarse_best = coarse.maxCoeff(&best_index);

  std::vector<Eigen::Index> candidates{best_index};
  for (Eigen::Index k = 0; k < samples; ++k) {
    const double prev = coarse[(k + samples - 1) % samples];
    const double next = coarse[(k + 1) % samples];
    if (k != best_index && coarse[k] > prev && coarse[k] >= next && coarse[k] >= 0.9 * coarse_best) {
      candidates.push_back(k);
    }
  }

  const auto modulus = [&t](double angle) { return std::abs(eval(t, std::polar(1.0, angle))); };
  constexpr double kInvPhi = 0.6180339887498949;
  double best = coarse_best;
  double width = 0.0;
  for (const Eigen::Index k : candidates) {
    double a = h * static_cast<double>(k) - h;
    double b = h * static_cast<double>(k) + h;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = modulus(x1);
    double f2 = modulus(x2);
    while (b - a > 1e-11) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = modulus(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = modulus(x1);
      }
    }
    const double local = std::max({f1, f2, modulus(0.5 * (a + b))});
    if (local > best) {
      best = local;
    }
    width = std::max(width, b - a);
  }

  // |d/dt T(e^{it})| <= sum_j |j a_j|
  double slope_bound = 0.0;
  for (int j = -n; j <= n; ++j) {
    slope_bound += std::abs(j) * std::abs(t.coeff(j));
  }
  return {MeanOrder::infinity(), best, width * slope_bound, MeanMethod::sampled_max};
}

MeanResult mean(const LaurentPolynomial& t, MeanOrder p, const QuadratureConfig& grid) {
  if (p.is_zero()) {
    return mahler_measure(t);
  }
  if (p.is_infinite()) {
    return mean_inf(t);
  }
  return mean_p(t, p.value(), grid);
}

double logplus_integral(const LaurentPolynomial& t, const QuadratureConfig& grid) {
  require_nonzero(t);
  validate(grid);
  const int samples = std::max(grid.start_nodes, 16 * (2 * t.degree_bound() + 1));
  const double h = kTwoPi / samples;
  const auto excess_at = [&t](double angle) { return std::norm(eval(t, std::polar(1.0, angle))) - 1.0; };
  const auto log_modulus = [&t](const Eigen::ArrayXd& angles) -> Eigen::ArrayXd {
    return eval_on_circle(t, angles).abs().max(kTinyModulus).log();
  };

  // A dip of |T| below 1 narrower than the grid needs a zero close to the circle at that angle,
  // so those angles join the uniform grid.
  const RootSet roots = laurent_roots(t);
  std::vector<double> angles(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    angles[static_cast<std::size_t>(k)] = h * k;
  }
  for (const Complex z : roots.roots) {
    if (std::abs(std::abs(z) - 1.0) < 0.25) {
      const double a = std::arg(z);
      angles.push_back(a < 0.0 ? a + kTwoPi : a);
    }
  }
  std::sort(angles.begin(), angles.end());
  Eigen::ArrayXd at(static_cast<Eigen::Index>(angles.size()));
  for (std::size_t k = 0; k < angles.size(); ++k) {
    at[static_cast<Eigen::Index>(k)] = angles[k];
  }
  const Eigen::ArrayXd excess = eval_on_circle(t, at).abs2() - 1.0;

  // Kinks of log+ |T| sit where |T| crosses 1; bracket them on the samples and bisect.
  std::vector<double> kinks;
  const std::size_t m = angles.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double fa = excess[static_cast<Eigen::Index>(k)];
    const double fb = excess[static_cast<Eigen::Index>((k + 1) % m)];
    if ((fa > 0.0) == (fb > 0.0)) {
      continue;
    }
    double a = angles[k];
    double b = k + 1 < m ? angles[k + 1] : angles[0] + kTwoPi;
    const bool rising = fb > 0.0;
    for (int iter = 0; iter < 60 && b - a > 1e-15; ++iter) {
      const double mid = 0.5 * (a + b);
      if ((excess_at(mid) > 0.0) == rising) {
        b = mid;
      } else {
        a = mid;
      }
    }
    kinks.push_back(0.5 * (a + b));
  }

  if (kinks.empty()) {
    if (excess[0] <= 0.0) {
      return 0.0;
    }
    return std::max(0.0, periodic_trapezoid_mean(log_modulus, grid, 1.0, samples).value);
  }

  const std::vector<Complex> singularities = circle_preimages(roots.roots);
  double total = 0.0;
  const std::size_t count = kinks.size();
  for (std::size_t i = 0; i < count; ++i) {
    const double start = kinks[i];
    const double end = (i + 1 < count) ? kinks[i + 1] : kinks[0] + kTwoPi;
    if (excess_at(0.5 * (start + end)) <= 0.0) {
      continue;
    }
    total += singularity_aware_gauss(log_modulus, start, end, singularities).value;
  }
  return std::max(0.0, total / kTwoPi);
}

} // namespace bernstein
