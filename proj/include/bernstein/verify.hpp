#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bernstein/means.hpp"
#include "bernstein/poly.hpp"
#include "bernstein/quadrature.hpp"

namespace bernstein {

enum class Claim {
  thm_1_1,
  thm_1_2,
  thm_1_3,
  lemma_2_1,
  lemma_2_2,
  equality_case,
  monotone_p,
  identity_3_1,
  identity_3_2,
};

std::string_view to_string(Claim c);
/// Accepts the dashed tags ("thm-1-1", "lemma-2-2", ...). Throws InvalidArgument.
Claim parse_claim(std::string_view tag);

/// Lemma checks are conditional: inputs outside their hypothesis are skipped
/// or flagged as precondition failures, never counted as failures.
enum class Outcome { passed, failed, skipped, precondition_failed };

std::string_view to_string(Outcome o);

struct VerificationReport {
  Claim claim = Claim::thm_1_1;
  Outcome outcome = Outcome::skipped;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs for inequalities, -|lhs - rhs| for equalities.
  double margin = 0.0;
  double tolerance_used = 0.0;
  std::optional<LaurentPolynomial> witness;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const noexcept { return outcome == Outcome::passed; }
  bool counted() const noexcept { return outcome == Outcome::passed || outcome == Outcome::failed; }
  /// margin / max(|lhs|, |rhs|, 1).
  double normalized_margin() const noexcept;
};

/// passed <=> margin >= -tol * max(|lhs|, |rhs|, 1).
bool within_tolerance(double lhs, double rhs, double margin, double tol) noexcept;

enum class Distribution { coeff_gaussian, roots_in_disk, roots_outside, roots_mixed, roots_on_circle };

std::string_view to_string(Distribution d);
Distribution parse_distribution(std::string_view tag);

struct SampleSpec {
  int n = 1;
  Distribution distribution = Distribution::coeff_gaussian;
  std::uint64_t seed = 0;
  int count = 1;
};

/// The index-th polynomial of the family. Each index has its own RNG stream,
/// so samples can be drawn in any order or concurrently.
LaurentPolynomial sample_polynomial(const SampleSpec& spec, int index);

inline constexpr double kDefaultTolerance = 1e-8;
/// Floor applied to quadrature routes when zeros sit within kCircleProximity of the circle.
inline constexpr double kCircleAdjacentTolerance = 1e-6;

/// ||T'||_p <= n ||T||_p on the unit circle. At p = 0 the Jensen-product and
/// quadrature routes must both pass.
VerificationReport check_bernstein(const LaurentPolynomial& t, MeanOrder p, double tol = kDefaultTolerance,
                                   const QuadratureConfig& grid = {});

/// ||T'||_0 = n|a_n| and ||T||_0 = |a_n| when z^n T has every zero in the closed disk.
VerificationReport check_equality_case(const LaurentPolynomial& t, double tol = 1e-7);

/// Zeros of z^n S in the closed disk imply zeros of S' in the closed disk.
VerificationReport check_lemma_2_1(const LaurentPolynomial& s, double eps = 1e-6);

/// |T| <= |V| on the circle and z^n V with zeros in the closed disk imply |T'| <= |V'| on the circle.
VerificationReport check_lemma_2_2(const LaurentPolynomial& t, const LaurentPolynomial& v, int points = 4096,
                                   double tol = kDefaultTolerance);

/// Number of w-grid points in the averaged recomputation of check_theorem_1_2.
inline constexpr int kFubiniNodes = 64;
inline constexpr double kFubiniTolerance = 1e-3;

/// int log+ |T'/n| <= int log+ |T|. The details carry the w-averaged
/// recomputation of both sides ("fubini_lhs", "fubini_rhs", "fubini_gap",
/// "fubini_ok"); the verdict is the inequality alone.
VerificationReport check_theorem_1_2(const LaurentPolynomial& t, const QuadratureConfig& grid = {},
                                     double tol = 1e-6);

/// Both sides of check_theorem_1_2 recomputed by averaging log M_0 of
/// T'/n + w z^{n-1} and T + w z^n over `nodes` midpoint angles w.
struct FubiniSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
FubiniSides fubini_logplus(const LaurentPolynomial& t, int nodes = kFubiniNodes);

/// M_0 <= M_{p_1} <= ... <= M_{p_k} <= M_inf.
VerificationReport check_monotone_p(const LaurentPolynomial& t, std::span<const double> p_grid,
                                    double tol = kDefaultTolerance, const QuadratureConfig& grid = {});

/// smoothed_logplus(v) against max(log|v|, 0).
VerificationReport check_identity_3_1(Complex v, double tol = 1e-8, int nodes = 64);

/// mu_moment(u, p) / u^p against 1.
VerificationReport check_identity_3_2(double u, double p, double tol = 1e-8);

struct SweepSummary {
  int count = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int precondition_failed = 0;
  /// Smallest normalized margin among counted reports (+inf if none).
  double min_margin = 0.0;
  std::optional<VerificationReport> worst;

  bool ok() const noexcept { return failed == 0 && precondition_failed == 0; }
};

/// Associative merge: counts add, the worst witness is the smaller margin.
SweepSummary merge(SweepSummary a, const SweepSummary& b);
SweepSummary summarize(std::span<const VerificationReport> reports);

/// Runs `body(i)` for i in [0, count) on up to `jobs` threads (0 = hardware
/// concurrency). Results are returned in index order.
std::vector<VerificationReport> parallel_sweep(int count, int jobs,
                                               const std::function<std::vector<VerificationReport>(int)>& body);

/// Default tolerance of each claim (eps for lemma-2-1).
double default_tolerance(Claim c);

/// The index-th point of the identity-3-1 sweep: log-uniform modulus in
/// [1e-2, 1e2], with every fourth point inside the 1e-3 band around |v| = 1.
Complex sample_point(std::uint64_t seed, int index);

struct SweepOptions {
  /// Orders for thm-1-3.
  std::vector<MeanOrder> orders = {MeanOrder::finite(0.25), MeanOrder::finite(0.5), MeanOrder::finite(1.0),
                                   MeanOrder::finite(2.0),  MeanOrder::finite(4.0), MeanOrder::infinity()};
  /// Interior grid for monotone-p.
  std::vector<double> p_grid = {0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 16.0};
  /// Exponents for identity-3-2.
  std::vector<double> moment_orders = {0.25, 0.5, 1.0, 2.0, 4.0};
  /// Log-spaced u values in [1e-3, 1e3] for identity-3-2.
  int moment_points = 61;
  /// Unset selects default_tolerance(claim).
  std::optional<double> tol;
  int jobs = 0;
  QuadratureConfig grid;
};

/// Checks one polynomial against a polynomial claim (not the identities).
/// `circle_zeros` raises the tolerance to kCircleAdjacentTolerance for p < 1.
std::vector<VerificationReport> check_claim(Claim claim, const LaurentPolynomial& t, const SweepOptions& options = {},
                                            bool circle_zeros = false);

/// Runs `claim` on every sample of `spec` (identity-3-1 draws points,
/// identity-3-2 walks its fixed grid and ignores the spec). Reports come back
/// in sample-index order whatever the number of jobs. Roots-on-circle samples
/// at p < 1 use a tolerance of at least kCircleAdjacentTolerance.
std::vector<VerificationReport> run_sweep(Claim claim, const SampleSpec& spec, const SweepOptions& options = {});

} // namespace bernstein
