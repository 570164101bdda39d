#include "bernstein/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "bernstein/errors.hpp"

namespace bernstein {
namespace {

using Point = Eigen::VectorXd;

constexpr double kDegenerate = 1e-12;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

LaurentPolynomial to_poly(int n, const Point& x) {
  CoeffVector c(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    c[k] = Complex(x[2 * k], x[2 * k + 1]);
  }
  return {n, std::move(c)};
}

Point to_point(const LaurentPolynomial& t) {
  const int n = t.degree_bound();
  Point x(2 * (2 * n + 1));
  for (int k = 0; k <= 2 * n; ++k) {
    x[2 * k] = t.coeffs()[k].real();
    x[2 * k + 1] = t.coeffs()[k].imag();
  }
  return x;
}

// Unit M_2 is the unit Euclidean norm of the coefficient vector.
void project(Point& x) {
  const double norm = x.norm();
  if (norm > 0.0) {
    x /= norm;
  }
}

struct Search {
  int n;
  MeanOrder p;
  std::mt19937_64 rng;
  RatioTrace& trace;
  int budget_left = 0;

  Point random_point() {
    std::normal_distribution<double> normal;
    Point x(2 * (2 * n + 1));
    for (auto& v : x) {
      v = normal(rng);
    }
    project(x);
    return x;
  }

  // -ratio, or nullopt for a degenerate iterate.
  std::optional<double> evaluate(const Point& x) {
    --budget_left;
    ++trace.evaluations;
    Point unit = x;
    project(unit);
    const LaurentPolynomial t = to_poly(n, unit);
    double ratio = 0.0;
    try {
      const double upper = t.is_zero() ? 0.0 : mean(t, p).value;
      if (upper < kDegenerate) {
        return std::nullopt;
      }
      const LaurentPolynomial dt = derivative(t);
      ratio = dt.is_zero() ? 0.0 : mean(dt, p).value / (n * upper);
    } catch (const NumericFailure&) {
      return std::nullopt;
    }
    if (!std::isfinite(ratio)) {
      return std::nullopt;
    }
    trace.max_evaluated_ratio = std::max(trace.max_evaluated_ratio, ratio);
    if (ratio > trace.best_ratio || trace.history.empty()) {
      trace.best_ratio = ratio;
      trace.best_poly = t;
      trace.history.emplace_back(trace.evaluations - 1, ratio);
    }
    return -ratio;
  }

  // Evaluates x, replacing degenerate points by random ones. nullopt once the
  // budget is gone.
  std::optional<double> evaluate_or_replace(Point& x) {
    while (budget_left > 0) {
      if (const auto f = evaluate(x)) {
        return f;
      }
      x = random_point();
    }
    return std::nullopt;
  }

  void run(Point x0) {
    const int d = static_cast<int>(x0.size());
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / d;
    const double gamma = 0.75 - 1.0 / (2.0 * d);
    const double delta = 1.0 - 1.0 / d;

    project(x0);
    double step = 0.3;
    bool first = true;
    std::normal_distribution<double> normal(0.0, 1.0);
    while (budget_left > d + 1) {
      std::vector<Point> simplex(d + 1, x0);
      std::vector<double> f(d + 1);
      for (int i = 0; i <= d; ++i) {
        if (i > 0 && first) {
          simplex[i][i - 1] += step;
        } else if (i > 0) {
          // rebuilt simplices take random edge directions
          Point dir(d);
          for (auto& v : dir) {
            v = normal(rng);
          }
          simplex[i] += step * dir.normalized();
        }
        const auto v = evaluate_or_replace(simplex[i]);
        if (!v) {
          return;
        }
        f[i] = *v;
      }

      std::vector<int> order(d + 1);
      double last_best = *std::min_element(f.begin(), f.end());
      int stalled = 0;
      double size = 0.0;
      while (budget_left > 0) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return f[a] < f[b]; });
        const int best = order.front();
        const int worst = order.back();
        const int second = order[d - 1];

        double spread = 0.0;
        for (int i = 0; i <= d; ++i) {
          spread = std::max(spread, (simplex[i] - simplex[best]).lpNorm<Eigen::Infinity>());
        }
        size = spread;
        if (spread < 1e-9 || f[worst] - f[best] < 1e-15) {
          break;
        }
        if (++stalled > 10 * d) {
          if (f[best] > last_best - 1e-7) {
            break;
          }
          last_best = f[best];
          stalled = 0;
        }
        ++trace.iterations;

        Point centroid = Point::Zero(d);
        for (int i = 0; i <= d; ++i) {
          if (i != worst) {
            centroid += simplex[i];
          }
        }
        centroid /= d;

        Point xr = centroid + alpha * (centroid - simplex[worst]);
        const auto fr = evaluate_or_replace(xr);
        if (!fr) {
          break;
        }
        if (*fr < f[best]) {
          Point xe = centroid + beta * (xr - centroid);
          const auto fe = evaluate_or_replace(xe);
          if (fe && *fe < *fr) {
            simplex[worst] = xe;
            f[worst] = *fe;
          } else {
            simplex[worst] = xr;
            f[worst] = *fr;
          }
          continue;
        }
        if (*fr < f[second]) {
          simplex[worst] = xr;
          f[worst] = *fr;
          continue;
        }
        const bool outside = *fr < f[worst];
        Point xc = outside ? Point(centroid + gamma * (xr - centroid)) : Point(centroid - gamma * (centroid - simplex[worst]));
        const auto fc = evaluate_or_replace(xc);
        if (!fc) {
          break;
        }
        if (*fc < (outside ? *fr : f[worst])) {
          simplex[worst] = xc;
          f[worst] = *fc;
          continue;
        }
        for (int i = 0; i <= d && budget_left > 0; ++i) {
          if (i == best) {
            continue;
          }
          simplex[i] = simplex[best] + delta * (simplex[i] - simplex[best]);
          const auto fs = evaluate_or_replace(simplex[i]);
          if (!fs) {
            return;
          }
          f[i] = *fs;
        }
      }
      // Collapsed or stalled simplex: rebuild around the best vertex at the scale it had reached.
      x0 = simplex[static_cast<std::size_t>(std::min_element(f.begin(), f.end()) - f.begin())];
      const double scale = x0.norm();
      project(x0);
      step = std::clamp(2.0 * size / scale, 1e-4, 0.3);
      first = false;
    }
  }
};

} // namespace

double ratio_objective(const LaurentPolynomial& t, MeanOrder p) {
  const int n = t.degree_bound();
  if (n < 1) {
    throw InvalidArgument("ratio needs class bound n >= 1");
  }
  if (t.is_zero()) {
    throw InvalidArgument("ratio is undefined for the zero polynomial");
  }
  const LaurentPolynomial dt = derivative(t);
  const double lower = dt.is_zero() ? 0.0 : mean(dt, p).value;
  return lower / (n * mean(t, p).value);
}

RatioTrace maximize_ratio(int n, MeanOrder p, const RatioSearch& search) {
  if (n < 1) {
    throw InvalidArgument("maximize_ratio needs n >= 1");
  }
  if (search.budget < 100) {
    throw InvalidArgument("maximize_ratio needs a budget of at least 100 evaluations");
  }
  if (search.restarts < 1) {
    throw InvalidArgument("maximize_ratio needs at least one restart");
  }
  if (search.start && search.start->degree_bound() != n) {
    throw InvalidArgument("start polynomial must have class bound n");
  }

  RatioTrace trace;
  trace.n = n;
  trace.p = p;
  trace.best_poly = LaurentPolynomial(n);
  for (int r = 0; r < search.restarts; ++r) {
    Search s{n, p, std::mt19937_64(mix(mix(search.seed) ^ static_cast<std::uint64_t>(r))), trace, search.budget};
    Point x0 = (r == 0 && search.start) ? to_point(*search.start) : s.random_point();
    s.run(std::move(x0));
  }
  if (trace.history.empty()) {
    throw NumericFailure("every restart of the ratio search degenerated", 0.0);
  }
  trace.inconsistency = trace.max_evaluated_ratio > 1.0 + kRatioSlack;
  return trace;
}

std::vector<std::pair<int, double>> downsample(const std::vector<std::pair<int, double>>& history, int points) {
  const auto size = static_cast<int>(history.size());
  if (size <= points || points < 2) {
    return history;
  }
  std::vector<std::pair<int, double>> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const auto index = static_cast<std::size_t>(static_cast<long long>(k) * (size - 1) / (points - 1));
    out.push_back(history[index]);
  }
  return out;
}

} // namespace bernstein
