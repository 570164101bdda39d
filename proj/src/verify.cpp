#include "bernstein/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "bernstein/constructions.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/rootfind.hpp"

namespace bernstein {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Tag {
  Claim claim;
  std::string_view name;
};

constexpr Tag kClaims[] = {
    {Claim::thm_1_1, "thm-1-1"},         {Claim::thm_1_2, "thm-1-2"},
    {Claim::thm_1_3, "thm-1-3"},         {Claim::lemma_2_1, "lemma-2-1"},
    {Claim::lemma_2_2, "lemma-2-2"},     {Claim::equality_case, "equality-case"},
    {Claim::monotone_p, "monotone-p"},   {Claim::identity_3_1, "identity-3-1"},
    {Claim::identity_3_2, "identity-3-2"},
};

double scale_of(double lhs, double rhs) { return std::max({std::abs(lhs), std::abs(rhs), 1.0}); }

VerificationReport inequality(Claim claim, double lhs, double rhs, double tol) {
  VerificationReport r;
  r.claim = claim;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tolerance_used = tol;
  r.outcome = within_tolerance(lhs, rhs, r.margin, tol) ? Outcome::passed : Outcome::failed;
  return r;
}

VerificationReport equality(Claim claim, double lhs, double rhs, double tol) {
  VerificationReport r = inequality(claim, lhs, rhs, tol);
  r.margin = -std::abs(lhs - rhs);
  r.outcome = within_tolerance(lhs, rhs, r.margin, tol) ? Outcome::passed : Outcome::failed;
  return r;
}

VerificationReport not_applicable(Claim claim, Outcome outcome, double tol, std::string why) {
  VerificationReport r;
  r.claim = claim;
  r.outcome = outcome;
  r.lhs = kNaN;
  r.rhs = kNaN;
  r.margin = kNaN;
  r.tolerance_used = tol;
  r.details["reason"] = std::move(why);
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Complex complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

// M_0 of a (possibly zero) Laurent polynomial through its roots.
double jensen_m0(const LaurentPolynomial& t) { return t.is_zero() ? 0.0 : mahler_measure(t).value; }

double max_root_modulus(const RootSet& r) {
  double m = 0.0;
  for (const Complex z : r.roots) {
    m = std::max(m, std::abs(z));
  }
  return m;
}

void require_nonzero(const LaurentPolynomial& t) {
  if (t.is_zero()) {
    throw InvalidArgument("verification is undefined for the zero polynomial");
  }
}

} // namespace

std::string_view to_string(Claim c) {
  for (const Tag& tag : kClaims) {
    if (tag.claim == c) {
      return tag.name;
    }
  }
  return "unknown";
}

Claim parse_claim(std::string_view tag) {
  for (const Tag& t : kClaims) {
    if (t.name == tag) {
      return t.claim;
    }
  }
  throw InvalidArgument("unknown claim tag '" + std::string(tag) + "'");
}

std::string_view to_string(Outcome o) {
  switch (o) {
  case Outcome::passed:
    return "passed";
  case Outcome::failed:
    return "failed";
  case Outcome::skipped:
    return "skipped";
  case Outcome::precondition_failed:
    return "precondition-failed";
  }
  return "unknown";
}

double VerificationReport::normalized_margin() const noexcept { return margin / scale_of(lhs, rhs); }

bool within_tolerance(double lhs, double rhs, double margin, double tol) noexcept {
  return margin >= -tol * scale_of(lhs, rhs);
}

std::string_view to_string(Distribution d) {
  switch (d) {
  case Distribution::coeff_gaussian:
    return "coeff-gaussian";
  case Distribution::roots_in_disk:
    return "roots-in-disk";
  case Distribution::roots_outside:
    return "roots-outside";
  case Distribution::roots_mixed:
    return "roots-mixed";
  case Distribution::roots_on_circle:
    return "roots-on-circle";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view tag) {
  for (const Distribution d : {Distribution::coeff_gaussian, Distribution::roots_in_disk, Distribution::roots_outside,
                               Distribution::roots_mixed, Distribution::roots_on_circle}) {
    if (to_string(d) == tag) {
      return d;
    }
  }
  throw InvalidArgument("unknown distribution '" + std::string(tag) + "'");
}

LaurentPolynomial sample_polynomial(const SampleSpec& spec, int index) {
  if (index < 0 || index >= spec.count) {
    throw InvalidArgument("sample index out of range");
  }
  if (spec.n < 0) {
    throw InvalidArgument("class bound must be nonnegative");
  }
  const int n = spec.n;
  std::uint64_t stream = splitmix64(spec.seed);
  stream = splitmix64(stream ^ static_cast<std::uint64_t>(spec.distribution));
  stream = splitmix64(stream ^ static_cast<std::uint64_t>(n));
  stream = splitmix64(stream ^ static_cast<std::uint64_t>(index));
  std::mt19937_64 rng(stream);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  if (spec.distribution == Distribution::coeff_gaussian) {
    while (true) {
      CoeffVector c(2 * n + 1);
      for (auto& a : c) {
        a = complex_gaussian(rng);
      }
      LaurentPolynomial t(n, std::move(c));
      if (std::abs(t.leading()) >= 1e-6 * t.max_abs_coeff()) {
        return t;
      }
    }
  }

  Complex lead = complex_gaussian(rng);
  while (std::abs(lead) < 1e-3) {
    lead = complex_gaussian(rng);
  }
  std::vector<Complex> zeros(static_cast<std::size_t>(2 * n));
  for (Complex& z : zeros) {
    Distribution region = spec.distribution;
    if (region == Distribution::roots_mixed) {
      region = unit(rng) < 0.5 ? Distribution::roots_in_disk : Distribution::roots_outside;
    }
    double modulus = 1.0;
    if (region == Distribution::roots_in_disk) {
      modulus = unit(rng);
    } else if (region == Distribution::roots_outside) {
      // (1, 3]
      modulus = 3.0 - 2.0 * unit(rng);
    }
    z = std::polar(modulus, 2.0 * std::numbers::pi * unit(rng));
  }
  return from_algebraic(from_roots(lead, zeros), n);
}

VerificationReport check_bernstein(const LaurentPolynomial& t, MeanOrder p, double tol, const QuadratureConfig& grid) {
  require_nonzero(t);
  const int n = t.degree_bound();
  const LaurentPolynomial dt = derivative(t);
  const Claim claim = p.is_zero() ? Claim::thm_1_1 : Claim::thm_1_3;

  VerificationReport report;
  if (p.is_zero()) {
    const RootSet rt = laurent_roots(t);
    const double rhs = n * mahler_from_roots(rt).value;
    if (dt.is_zero()) {
      report = inequality(claim, 0.0, rhs, tol);
      report.details["route"] = "jensen-product";
    } else {
      const RootSet rd = derivative_roots(t);
      const double lhs = mahler_from_roots(rd).value;
      VerificationReport jensen = inequality(claim, lhs, rhs, tol);

      const bool adjacent = circle_distance(rt) < kCircleProximity || circle_distance(rd) < kCircleProximity;
      const double quad_tol = adjacent ? std::max(tol, kCircleAdjacentTolerance) : tol;
      const double quad_lhs = mean_0_quadrature(dt, rd, grid).value;
      const double quad_rhs = n * mean_0_quadrature(t, rt, grid).value;
      VerificationReport quadrature = inequality(claim, quad_lhs, quad_rhs, quad_tol);

      report = jensen.normalized_margin() <= quadrature.normalized_margin() ? jensen : quadrature;
      report.details["route"] = report.lhs == lhs && report.rhs == rhs ? "jensen-product" : "adaptive-singular";
      if (!jensen.passed() || !quadrature.passed()) {
        report.outcome = Outcome::failed;
      }
      report.details["jensen_lhs"] = lhs;
      report.details["jensen_rhs"] = rhs;
      report.details["quadrature_lhs"] = quad_lhs;
      report.details["quadrature_rhs"] = quad_rhs;
      report.details["quadrature_tol"] = quad_tol;
    }
  } else {
    const double lhs = dt.is_zero() ? 0.0 : mean(dt, p, grid).value;
    const double rhs = n * mean(t, p, grid).value;
    report = inequality(claim, lhs, rhs, tol);
  }
  report.witness = t;
  report.parameters["p"] = to_string(p);
  return report;
}

VerificationReport check_equality_case(const LaurentPolynomial& t, double tol) {
  require_nonzero(t);
  const int n = t.degree_bound();
  const RootSet rt = laurent_roots(t);
  if (rt.degree_deficit != 0 || !classify(rt, kDefaultCircleEpsilon).outside.empty()) {
    VerificationReport r =
        not_applicable(Claim::equality_case, Outcome::skipped, tol, "z^n T has zeros outside the closed disk");
    r.witness = t;
    return r;
  }
  const double an = std::abs(t.leading());
  const double m0 = mahler_from_roots(rt).value;
  const double m0_derivative = derivative(t).is_zero() ? 0.0 : mahler_from_roots(derivative_roots(t)).value;

  VerificationReport derivative_side = equality(Claim::equality_case, m0_derivative, n * an, tol);
  VerificationReport value_side = equality(Claim::equality_case, m0, an, tol);
  VerificationReport report =
      derivative_side.normalized_margin() <= value_side.normalized_margin() ? derivative_side : value_side;
  if (!derivative_side.passed() || !value_side.passed()) {
    report.outcome = Outcome::failed;
  }
  report.details["m0_derivative"] = m0_derivative;
  report.details["n_abs_an"] = n * an;
  report.details["m0"] = m0;
  report.details["abs_an"] = an;
  report.witness = t;
  return report;
}

VerificationReport check_lemma_2_1(const LaurentPolynomial& s, double eps) {
  require_nonzero(s);
  const RootSet rs = laurent_roots(s);
  if (rs.degree_deficit != 0 || max_root_modulus(rs) > 1.0 + eps) {
    VerificationReport r =
        not_applicable(Claim::lemma_2_1, Outcome::skipped, eps, "z^n S has zeros outside the closed disk");
    r.witness = s;
    return r;
  }
  const LaurentPolynomial ds = derivative(s);
  double largest = 0.0;
  int zeros = 0;
  if (!ds.is_zero()) {
    // Roots of z^{n+1} S'(z); exact origin factors come from the cleared tail.
    for (const Complex z : derivative_roots(s).roots) {
      if (z != 0.0) {
        largest = std::max(largest, std::abs(z));
        ++zeros;
      }
    }
  }
  VerificationReport report = inequality(Claim::lemma_2_1, largest, 1.0, eps);
  report.details["nonzero_derivative_zeros"] = zeros;
  report.witness = s;
  return report;
}

VerificationReport check_lemma_2_2(const LaurentPolynomial& t, const LaurentPolynomial& v, int points, double tol) {
  require_nonzero(v);
  if (points < 1) {
    throw InvalidArgument("majorant check needs a positive grid size");
  }
  // a_n = 0 is handled in the smallest class holding both T and V
  const int m = std::max(t.effective_bound(), v.effective_bound());
  const RootSet rv = laurent_roots(widen(deflate(v), m));
  if (rv.degree_deficit != 0 || max_root_modulus(rv) > 1.0 + kCircleAdjacentTolerance) {
    VerificationReport r = not_applicable(Claim::lemma_2_2, Outcome::precondition_failed, tol,
                                          "z^n V has zeros outside the closed disk");
    r.witness = t;
    return r;
  }
  const Eigen::ArrayXd mt = circle_moduli(t, points);
  const Eigen::ArrayXd mv = circle_moduli(v, points);
  for (Eigen::Index k = 0; k < points; ++k) {
    if (!within_tolerance(mt[k], mv[k], mv[k] - mt[k], tol)) {
      VerificationReport r =
          not_applicable(Claim::lemma_2_2, Outcome::precondition_failed, tol, "|T| <= |V| fails on the circle");
      r.details["angle"] = 2.0 * std::numbers::pi * static_cast<double>(k) / points;
      r.witness = t;
      return r;
    }
  }

  const Eigen::ArrayXd dt = circle_moduli(derivative(t), points);
  const Eigen::ArrayXd dv = circle_moduli(derivative(v), points);
  Eigen::Index worst = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < points; ++k) {
    const double slack = (dv[k] - dt[k]) / scale_of(dt[k], dv[k]);
    if (slack < worst_slack) {
      worst_slack = slack;
      worst = k;
    }
  }
  VerificationReport report = inequality(Claim::lemma_2_2, dt[worst], dv[worst], tol);
  report.details["angle"] = 2.0 * std::numbers::pi * static_cast<double>(worst) / points;
  report.details["hypothesis_gap"] = (mv - mt).abs().maxCoeff();
  report.witness = t;
  report.parameters["points"] = points;
  return report;
}

FubiniSides fubini_logplus(const LaurentPolynomial& t, int nodes) {
  require_nonzero(t);
  const int n = t.degree_bound();
  if (n < 1) {
    throw InvalidArgument("the averaged route needs n >= 1");
  }
  const LaurentPolynomial scaled_derivative = Complex(1.0 / n) * derivative(t);
  FubiniSides sides;
  for (int k = 0; k < nodes; ++k) {
    const Complex w = std::polar(1.0, std::numbers::pi * (2.0 * k + 1.0) / nodes);
    // T'/n + w z^{n-1} is the derivative of (T + w z^n)/n.
    const LaurentPolynomial lower = scaled_derivative + LaurentPolynomial::monomial(n + 1, n - 1, w);
    sides.lhs += std::log(jensen_m0(lower));
    sides.rhs += std::log(jensen_m0(perturb_by_en(t, w)));
  }
  sides.lhs /= nodes;
  sides.rhs /= nodes;
  return sides;
}

VerificationReport check_theorem_1_2(const LaurentPolynomial& t, const QuadratureConfig& grid, double tol) {
  require_nonzero(t);
  const int n = t.degree_bound();
  const LaurentPolynomial scaled_derivative = Complex(1.0 / std::max(n, 1)) * derivative(t);
  const double lhs = scaled_derivative.is_zero() ? 0.0 : logplus_integral(scaled_derivative, grid);
  const double rhs = logplus_integral(t, grid);
  VerificationReport report = inequality(Claim::thm_1_2, lhs, rhs, tol);
  if (n >= 1) {
    const FubiniSides sides = fubini_logplus(t);
    const double gap = std::max(std::abs(sides.lhs - lhs), std::abs(sides.rhs - rhs));
    report.details["fubini_lhs"] = sides.lhs;
    report.details["fubini_rhs"] = sides.rhs;
    report.details["fubini_gap"] = gap;
    report.details["fubini_ok"] = gap <= kFubiniTolerance;
  }
  report.witness = t;
  return report;
}

VerificationReport check_monotone_p(const LaurentPolynomial& t, std::span<const double> p_grid, double tol,
                                    const QuadratureConfig& grid) {
  require_nonzero(t);
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > 0.0) || !std::isfinite(p_grid[i]) || (i > 0 && !(p_grid[i] > p_grid[i - 1]))) {
      throw InvalidArgument("p grid must be strictly ascending positive reals");
    }
  }
  std::vector<MeanOrder> orders{MeanOrder::zero()};
  for (const double p : p_grid) {
    orders.push_back(MeanOrder::finite(p));
  }
  orders.push_back(MeanOrder::infinity());

  std::vector<double> values;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const MeanOrder p : orders) {
    values.push_back(mean(t, p, grid).value);
    table.push_back({to_string(p), values.back()});
  }
  std::size_t worst = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double slack = (values[i + 1] - values[i]) / scale_of(values[i], values[i + 1]);
    if (slack < worst_slack) {
      worst_slack = slack;
      worst = i;
    }
  }
  VerificationReport report = inequality(Claim::monotone_p, values[worst], values[worst + 1], tol);
  report.details["means"] = std::move(table);
  report.details["worst_step"] = {to_string(orders[worst]), to_string(orders[worst + 1])};
  report.witness = t;
  return report;
}

VerificationReport check_identity_3_1(Complex v, double tol, int nodes) {
  const double lhs = smoothed_logplus(v, nodes);
  const double rhs = std::max(std::log(std::abs(v)), 0.0);
  VerificationReport report = equality(Claim::identity_3_1, lhs, rhs, tol);
  report.parameters["v"] = {v.real(), v.imag()};
  report.parameters["nodes"] = nodes;
  return report;
}

VerificationReport check_identity_3_2(double u, double p, double tol) {
  const double moment = mu_moment(u, p);
  const double closed = std::pow(u, p);
  const double ratio = closed == 0.0 ? (moment == 0.0 ? 1.0 : kNaN) : moment / closed;
  VerificationReport report = equality(Claim::identity_3_2, ratio, 1.0, tol);
  report.parameters["u"] = u;
  report.parameters["p"] = p;
  report.details["moment"] = moment;
  report.details["u_pow_p"] = closed;
  return report;
}

SweepSummary merge(SweepSummary a, const SweepSummary& b) {
  a.count += b.count;
  a.passed += b.passed;
  a.failed += b.failed;
  a.skipped += b.skipped;
  a.precondition_failed += b.precondition_failed;
  if (b.worst && (!a.worst || b.min_margin < a.min_margin)) {
    a.worst = b.worst;
    a.min_margin = b.min_margin;
  }
  return a;
}

SweepSummary summarize(std::span<const VerificationReport> reports) {
  SweepSummary total;
  total.min_margin = std::numeric_limits<double>::infinity();
  for (const VerificationReport& r : reports) {
    SweepSummary one;
    one.count = 1;
    switch (r.outcome) {
    case Outcome::passed:
      one.passed = 1;
      break;
    case Outcome::failed:
      one.failed = 1;
      break;
    case Outcome::skipped:
      one.skipped = 1;
      break;
    case Outcome::precondition_failed:
      one.precondition_failed = 1;
      break;
    }
    one.min_margin = std::numeric_limits<double>::infinity();
    if (r.counted()) {
      one.min_margin = r.normalized_margin();
      one.worst = r;
    }
    total = merge(std::move(total), one);
  }
  return total;
}

double default_tolerance(Claim c) {
  switch (c) {
  case Claim::thm_1_2:
  case Claim::lemma_2_1:
    return 1e-6;
  case Claim::equality_case:
    return 1e-7;
  default:
    return kDefaultTolerance;
  }
}

Complex sample_point(std::uint64_t seed, int index) {
  std::mt19937_64 rng(splitmix64(splitmix64(seed ^ 0x3131) ^ static_cast<std::uint64_t>(index)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double modulus = index % 4 == 3 ? 1.0 + 1e-3 * (2.0 * unit(rng) - 1.0) : std::pow(10.0, 4.0 * unit(rng) - 2.0);
  return std::polar(modulus, 2.0 * std::numbers::pi * unit(rng));
}

std::vector<VerificationReport> check_claim(Claim claim, const LaurentPolynomial& t, const SweepOptions& options,
                                            bool circle_zeros) {
  const double tol = options.tol.value_or(default_tolerance(claim));
  std::vector<VerificationReport> out;
  const auto bernstein_at = [&](MeanOrder p) {
    const bool loose = circle_zeros && p.value() < 1.0;
    out.push_back(check_bernstein(t, p, loose ? std::max(tol, kCircleAdjacentTolerance) : tol, options.grid));
  };
  switch (claim) {
  case Claim::thm_1_1:
    bernstein_at(MeanOrder::zero());
    break;
  case Claim::thm_1_3:
    for (const MeanOrder p : options.orders) {
      bernstein_at(p);
    }
    break;
  case Claim::thm_1_2:
    out.push_back(check_theorem_1_2(t, options.grid, tol));
    break;
  case Claim::lemma_2_1:
    out.push_back(check_lemma_2_1(t, tol));
    break;
  case Claim::lemma_2_2: {
    const ReflectionOutput reflection = reflect_outside(t);
    VerificationReport r = check_lemma_2_2(t, reflection.v, 4096, tol);
    r.details["reflected"] = reflection.m;
    r.details["modulus_discrepancy"] = reflection.modulus_discrepancy;
    out.push_back(std::move(r));
    break;
  }
  case Claim::equality_case:
    out.push_back(check_equality_case(t, tol));
    break;
  case Claim::monotone_p:
    out.push_back(check_monotone_p(t, options.p_grid, tol, options.grid));
    break;
  case Claim::identity_3_1:
  case Claim::identity_3_2:
    throw InvalidArgument(std::string(to_string(claim)) + " does not take a polynomial");
  }
  return out;
}

std::vector<VerificationReport> run_sweep(Claim claim, const SampleSpec& spec, const SweepOptions& options) {
  if (spec.count < 1) {
    throw InvalidArgument("sample count must be positive");
  }
  const double tol = options.tol.value_or(default_tolerance(claim));

  if (claim == Claim::identity_3_2) {
    const int points = options.moment_points;
    if (points < 2) {
      throw InvalidArgument("identity-3-2 needs at least two u values");
    }
    const auto orders = static_cast<int>(options.moment_orders.size());
    return parallel_sweep(points * orders, options.jobs, [&](int i) {
      const double u = std::pow(10.0, -3.0 + 6.0 * static_cast<double>(i / orders) / (points - 1));
      VerificationReport r = check_identity_3_2(u, options.moment_orders[static_cast<std::size_t>(i % orders)], tol);
      r.parameters["index"] = i;
      return std::vector<VerificationReport>{std::move(r)};
    });
  }

  if (claim == Claim::identity_3_1) {
    return parallel_sweep(spec.count, options.jobs, [&](int i) {
      const Complex v = sample_point(spec.seed, i);
      const bool near = std::abs(std::abs(v) - 1.0) < 1e-3;
      VerificationReport r = check_identity_3_1(v, near ? std::max(tol, 1e-4) : tol);
      r.parameters["index"] = i;
      r.parameters["seed"] = spec.seed;
      return std::vector<VerificationReport>{std::move(r)};
    });
  }

  return parallel_sweep(spec.count, options.jobs, [&](int i) {
    std::vector<VerificationReport> out = check_claim(claim, sample_polynomial(spec, i), options,
                                                      spec.distribution == Distribution::roots_on_circle);
    for (VerificationReport& r : out) {
      r.parameters["index"] = i;
      r.parameters["n"] = spec.n;
      r.parameters["distribution"] = std::string(to_string(spec.distribution));
      r.parameters["seed"] = spec.seed;
    }
    return out;
  });
}

std::vector<VerificationReport> parallel_sweep(int count, int jobs,
                                               const std::function<std::vector<VerificationReport>(int)>& body) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  jobs = std::max(1, std::min(jobs, count));
  std::vector<std::vector<VerificationReport>> slots(static_cast<std::size_t>(std::max(count, 0)));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  const auto worker = [&]() {
    for (int i = next++; i < count && !failed; i = next++) {
      try {
        slots[static_cast<std::size_t>(i)] = body(i);
      } catch (...) {
        if (!failed.exchange(true)) {
          failure = std::current_exception();
        }
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  std::vector<VerificationReport> out;
  for (auto& slot : slots) {
    std::move(slot.begin(), slot.end(), std::back_inserter(out));
  }
  return out;
}

} // namespace bernstein
