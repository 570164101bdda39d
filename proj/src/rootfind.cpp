#include "bernstein/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

struct HornerValue {
  Complex value;
  Complex slope;
  double bound;  // sum_j |a_j| |z|^j, the scale of rounding in `value`
};

HornerValue horner(const CoeffVector& a, Complex z) {
  const double az = std::abs(z);
  Complex v = a[a.size() - 1];
  Complex dv = 0.0;
  double b = std::abs(v);
  for (Eigen::Index j = a.size() - 2; j >= 0; --j) {
    dv = dv * z + v;
    v = v * z + a[j];
    b = b * az + std::abs(a[j]);
  }
  return {v, dv, b};
}

struct AberthOutcome {
  std::vector<Complex> roots;
  bool converged = false;
  double residual = 0.0;
};

AberthOutcome aberth(const CoeffVector& a, std::vector<Complex> z, double tol, int max_iterations) {
  const auto d = static_cast<Eigen::Index>(z.size());
  const Complex lead = a[d];
  std::vector<bool> done(z.size(), false);
  AberthOutcome out;

  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_done = true;
    double worst = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) {
      if (done[k]) {
        continue;
      }
      const HornerValue h = horner(a, z[k]);
      Complex repulsion = 0.0;
      Complex separation = 1.0;
      for (Eigen::Index j = 0; j < d; ++j) {
        if (j != k) {
          const Complex diff = z[k] - z[j];
          repulsion += 1.0 / diff;
          separation *= diff;
        }
      }
      const double correction = std::abs(h.value) / (std::abs(lead) * std::abs(separation));
      const double scale = std::max(1.0, std::abs(z[k]));
      if (h.value == 0.0 || std::abs(h.value) <= 8.0 * kUnitRoundoff * static_cast<double>(d) * h.bound) {
        done[k] = true;
        continue;
      }
      const Complex newton = h.slope / h.value;
      const Complex denom = newton - repulsion;
      if (denom == 0.0 || !std::isfinite(std::abs(denom))) {
        z[k] += Complex(tol, tol) * scale * 1e3;
        all_done = false;
        continue;
      }
      // A converged root still takes its final step.
      z[k] -= 1.0 / denom;
      if (correction <= tol * scale) {
        done[k] = true;
        continue;
      }
      worst = std::max(worst, correction / scale);
      all_done = false;
    }
    out.residual = worst;
    if (all_done) {
      out.converged = true;
      break;
    }
  }
  out.roots = std::move(z);
  return out;
}

using WideComplex = std::complex<long double>;
using WideCoeffs = std::vector<WideComplex>;

WideComplex wide_horner(const WideCoeffs& a, WideComplex z, WideComplex* slope) {
  WideComplex v = a.back();
  WideComplex dv = 0.0L;
  for (std::size_t j = a.size() - 1; j-- > 0;) {
    dv = dv * z + v;
    v = v * z + a[j];
  }
  if (slope != nullptr) {
    *slope = dv;
  }
  return v;
}

// Aberth sweeps in extended precision on the exact coefficients. A step is
// kept only when it lowers |p|.
void polish(const WideCoeffs& a, std::vector<Complex>& z) {
  const std::size_t d = z.size();
  std::vector<WideComplex> w(z.begin(), z.end());
  for (int sweep = 0; sweep < 6; ++sweep) {
    bool moved = false;
    for (std::size_t k = 0; k < d; ++k) {
      WideComplex slope;
      const WideComplex value = wide_horner(a, w[k], &slope);
      if (value == 0.0L) {
        continue;
      }
      WideComplex repulsion = 0.0L;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k && w[j] != w[k]) {
          repulsion += 1.0L / (w[k] - w[j]);
        }
      }
      const WideComplex denom = slope / value - repulsion;
      if (denom == 0.0L) {
        continue;
      }
      const WideComplex candidate = w[k] - 1.0L / denom;
      if (std::abs(wide_horner(a, candidate, nullptr)) < std::abs(value)) {
        moved = moved || candidate != w[k];
        w[k] = candidate;
      }
    }
    if (!moved) {
      break;
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    z[k] = Complex(static_cast<double>(w[k].real()), static_cast<double>(w[k].imag()));
  }
}

std::vector<Complex> initial_guesses(const CoeffVector& a, std::mt19937_64* rng) {
  const auto d = a.size() - 1;
  double radius = std::pow(std::abs(a[0]) / std::abs(a[d]), 1.0 / static_cast<double>(d));
  double offset = 0.4;
  double jitter = 0.0;
  if (rng != nullptr) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    radius *= 0.5 + unit(*rng);
    offset = 2.0 * std::numbers::pi * unit(*rng);
    jitter = 0.3;
  }
  std::vector<Complex> z(static_cast<std::size_t>(d));
  std::uniform_real_distribution<double> wiggle(-1.0, 1.0);
  for (Eigen::Index k = 0; k < d; ++k) {
    double angle = offset + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d);
    if (rng != nullptr) {
      angle += jitter * wiggle(*rng) / static_cast<double>(d);
    }
    z[k] = std::polar(radius, angle);
  }
  return z;
}

// `exact` holds the same coefficients as `raw`, possibly without the rounding `raw` carries.
RootSet solve(const CoeffVector& raw, const WideCoeffs& exact, double tol, const AberthOptions& options) {
  Eigen::Index top = raw.size() - 1;
  while (raw[top] == 0.0) {
    --top;
  }
  Eigen::Index low = 0;
  while (raw[low] == 0.0) {
    ++low;
  }

  RootSet out;
  out.leading = raw[top];
  out.degree_deficit = static_cast<int>(raw.size() - 1 - top);
  out.roots.assign(static_cast<std::size_t>(low), Complex(0.0));

  const CoeffVector a = raw.segment(low, top - low + 1);
  const Eigen::Index d = a.size() - 1;
  if (d == 0) {
    return out;
  }
  if (d == 1) {
    out.roots.push_back(-a[0] / a[1]);
    return out;
  }

  std::mt19937_64 rng(options.seed);
  AberthOutcome best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt <= options.restarts; ++attempt) {
    auto guesses = initial_guesses(a, attempt == 0 ? nullptr : &rng);
    AberthOutcome run = aberth(a, std::move(guesses), tol, options.max_iterations);
    if (run.converged) {
      polish(WideCoeffs(exact.begin() + low, exact.begin() + top + 1), run.roots);
      out.roots.insert(out.roots.end(), run.roots.begin(), run.roots.end());
      return out;
    }
    if (run.residual < best.residual) {
      best = std::move(run);
    }
  }
  throw NumericFailure("Aberth iteration did not converge", best.residual);
}

} // namespace

RootSet roots(const AlgebraicPolynomial& p, double tol, const AberthOptions& options) {
  if (p.is_zero()) {
    throw InvalidArgument("cannot find roots of the zero polynomial");
  }
  const CoeffVector& c = p.coeffs();
  return solve(c, WideCoeffs(c.begin(), c.end()), tol, options);
}

RootSet derivative_roots(const LaurentPolynomial& t, double tol) {
  const int n = t.degree_bound();
  const CoeffVector& a = t.coeffs();
  // z^{n+1} T'(z) = sum_j j a_j z^{j+n}; j a_j is exact in long double.
  CoeffVector raw = CoeffVector::Zero(2 * n + 1);
  WideCoeffs exact(static_cast<std::size_t>(2 * n + 1));
  for (int k = 0; k <= 2 * n; ++k) {
    const long double j = k - n;
    exact[static_cast<std::size_t>(k)] = WideComplex(j * a[k].real(), j * a[k].imag());
    raw[k] = static_cast<double>(k - n) * a[k];
  }
  if (raw.isZero(0.0)) {
    throw InvalidArgument("cannot find roots of the zero polynomial");
  }
  return solve(raw, exact, tol, {});
}

RootSet laurent_roots(const LaurentPolynomial& t, double tol) { return roots(to_algebraic(t), tol); }

AlgebraicPolynomial expand(const RootSet& r) { return from_roots(r.leading, r.roots); }

CirclePartition classify(const RootSet& r, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw InvalidArgument("circle classification epsilon must lie in (0, 0.5)");
  }
  CirclePartition part;
  part.epsilon = epsilon;
  for (const Complex z : r.roots) {
    const double gap = std::abs(z) - 1.0;
    if (gap < -epsilon) {
      part.inside.push_back(z);
    } else if (gap > epsilon) {
      part.outside.push_back(z);
    } else {
      part.on.push_back(z);
    }
  }
  return part;
}

double circle_distance(const RootSet& r) {
  double d = std::numeric_limits<double>::infinity();
  for (const Complex z : r.roots) {
    d = std::min(d, std::abs(std::abs(z) - 1.0));
  }
  return d;
}

} // namespace bernstein
