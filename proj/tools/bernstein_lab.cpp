#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bernstein/errors.hpp"
#include "bernstein/extremal.hpp"
#include "bernstein/io.hpp"
#include "bernstein/means.hpp"
#include "bernstein/verify.hpp"

namespace {

using namespace bernstein;

enum Exit { kPass = 0, kVerificationFailure = 1, kUsage = 2, kNumeric = 3 };

struct QuadFlags {
  int start_nodes = 64;
  int max_nodes = 1 << 20;
  double rel_tol = 1e-10;

  QuadratureConfig config() const {
    QuadratureConfig c{start_nodes, max_nodes, rel_tol};
    validate(c);
    return c;
  }
};

struct MeansFlags {
  std::string poly;
  std::vector<std::string> p = {"0", "1", "2", "inf"};
  QuadFlags quad;
};

struct VerifyFlags {
  std::string claim;
  std::string distribution = "coeff-gaussian";
  int n = 1;
  int count = 100;
  std::optional<double> tol;
  std::vector<std::string> p;
  std::vector<double> p_grid;
  std::string poly;
  std::string witness;
  int jobs = 0;
  QuadFlags quad;
};

struct ExtremalFlags {
  int n = 1;
  std::string p = "2";
  int restarts = 8;
  int budget = 20000;
  double threshold = 0.99;
};

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw InvalidArgument("cannot write '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
  std::ofstream file_;
};

std::vector<MeanOrder> parse_orders(const std::vector<std::string>& tokens) {
  std::vector<MeanOrder> out;
  for (const std::string& token : tokens) {
    out.push_back(parse_mean_order(token));
  }
  return out;
}

// Values from a --config JSON object fill every option not given on the command line.
void merge_config(CLI::App& sub, const std::string& path) {
  const std::string text = read_file(path);
  Json config;
  try {
    config = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), 1, 1);
  }
  if (!config.is_object()) {
    throw ParseError(path + ": config must be a JSON object", 1, 1);
  }
  for (const auto& [key, value] : config.items()) {
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config" || key == "save-config") {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
    if (opt->count() > 0) {
      continue;
    }
    const auto as_text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : dump(v); };
    if (value.is_array()) {
      for (const Json& item : value) {
        opt->add_result(as_text(item));
      }
    } else {
      opt->add_result(as_text(value));
    }
    opt->run_callback();
  }
}

// Effective settings of the selected subcommand, reusable as --config.
Json effective_config(const CLI::App& sub) {
  Json out = Json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "save-config" || name == "config") {
      continue;
    }
    const std::vector<std::string>& results = opt->results();
    if (!results.empty()) {
      out[name] = results.size() == 1 && opt->get_expected_max() <= 1 ? Json(results.front()) : Json(results);
    } else if (!opt->get_default_str().empty()) {
      out[name] = opt->get_default_str();
    }
  }
  return out;
}

int run_means(const MeansFlags& flags, const std::string& format, const std::string& out_path) {
  if (flags.poly.empty()) {
    throw InvalidArgument("means needs --poly");
  }
  const LaurentPolynomial t = read_polynomial_file(flags.poly);
  const QuadratureConfig grid = flags.quad.config();
  const std::vector<MeanOrder> orders = parse_orders(flags.p);
  std::vector<MeanResult> rows;
  for (const MeanOrder p : orders) {
    rows.push_back(mean(t, p, grid));
  }
  Output out(out_path);
  if (format == "json") {
    Json table = Json::array();
    for (const MeanResult& r : rows) {
      table.push_back(to_json(r));
    }
    out.stream() << dump(Json{{"poly", to_json(t)}, {"grid", to_json(grid)}, {"means", std::move(table)}}) << '\n';
  } else {
    out.stream() << kMeansCsvHeader << '\n';
    for (const MeanResult& r : rows) {
      out.stream() << csv_row(r) << '\n';
    }
  }
  return kPass;
}

int run_verify(const VerifyFlags& flags, std::uint64_t seed, const std::string& format, const std::string& out_path) {
  if (flags.claim.empty()) {
    throw InvalidArgument("verify needs --claim");
  }
  const Claim claim = parse_claim(flags.claim);
  SampleSpec spec{flags.n, parse_distribution(flags.distribution), seed, flags.count};
  if (spec.n < 0) {
    throw InvalidArgument("--n must be nonnegative");
  }
  SweepOptions options;
  if (!flags.p.empty()) {
    options.orders = parse_orders(flags.p);
  }
  if (!flags.p_grid.empty()) {
    options.p_grid = flags.p_grid;
  }
  options.tol = flags.tol;
  options.jobs = flags.jobs;
  options.grid = flags.quad.config();

  std::vector<VerificationReport> reports;
  if (!flags.poly.empty()) {
    reports = check_claim(claim, read_polynomial_file(flags.poly), options);
  } else {
    reports = run_sweep(claim, spec, options);
  }

  Output out(out_path);
  if (format == "csv") {
    out.stream() << "claim,outcome,lhs,rhs,margin,tolerance_used\n";
    for (const VerificationReport& r : reports) {
      out.stream() << to_string(r.claim) << ',' << to_string(r.outcome) << ',' << format_double(r.lhs) << ','
                   << format_double(r.rhs) << ',' << format_double(r.margin) << ',' << format_double(r.tolerance_used)
                   << '\n';
    }
  } else {
    for (const VerificationReport& r : reports) {
      out.stream() << dump(to_json(r)) << '\n';
    }
  }
  out.stream().flush();

  const SweepSummary summary = summarize(reports);
  std::string witness = "none";
  if (summary.worst && !flags.witness.empty()) {
    Output file(flags.witness);
    file.stream() << dump(to_json(*summary.worst)) << '\n';
    witness = flags.witness;
  }
  std::fprintf(stderr, "%s: count=%d passed=%d failed=%d skipped=%d precondition_failed=%d min_margin=%s worst=%s\n",
               std::string(to_string(claim)).c_str(), summary.count, summary.passed, summary.failed, summary.skipped,
               summary.precondition_failed, format_double(summary.worst ? summary.min_margin : 0.0).c_str(),
               witness.c_str());
  return summary.ok() ? kPass : kVerificationFailure;
}

int run_extremal(const ExtremalFlags& flags, std::uint64_t seed, const std::string& format,
                 const std::string& out_path) {
  if (flags.threshold > 1.0 + kRatioSlack) {
    std::fprintf(stderr, "threshold %s is unreachable: the ratio never exceeds 1 + %g\n",
                 format_double(flags.threshold).c_str(), kRatioSlack);
    return kVerificationFailure;
  }
  const MeanOrder p = parse_mean_order(flags.p);
  const RatioTrace trace = maximize_ratio(flags.n, p, RatioSearch{flags.restarts, flags.budget, seed, std::nullopt});
  Output out(out_path);
  if (format == "csv") {
    out.stream() << "evaluation,ratio\n";
    for (const auto& [evaluation, ratio] : downsample(trace.history)) {
      out.stream() << evaluation << ',' << format_double(ratio) << '\n';
    }
  } else {
    out.stream() << dump(to_json(trace)) << '\n';
  }
  out.stream().flush();
  std::fprintf(stderr, "extremal: n=%d p=%s best_ratio=%s max_evaluated=%s evaluations=%d\n", trace.n,
               to_string(p).c_str(), format_double(trace.best_ratio).c_str(),
               format_double(trace.max_evaluated_ratio).c_str(), trace.evaluations);
  if (trace.inconsistency) {
    std::fprintf(stderr, "numerical inconsistency: an evaluated ratio exceeded 1 + %g\n", kRatioSlack);
    return kVerificationFailure;
  }
  if (trace.best_ratio < flags.threshold) {
    std::fprintf(stderr, "best ratio below threshold %s\n", format_double(flags.threshold).c_str());
    return kVerificationFailure;
  }
  return kPass;
}

void add_quad_flags(CLI::App& sub, QuadFlags& q) {
  sub.add_option("--start-nodes", q.start_nodes, "Initial trapezoid nodes")->capture_default_str();
  sub.add_option("--max-nodes", q.max_nodes, "Trapezoid node cap")->capture_default_str();
  sub.add_option("--rel-tol", q.rel_tol, "Trapezoid relative tolerance")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized means of trigonometric polynomials and numerical checks of Bernstein-type inequalities"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string config_path;
  std::string save_config;
  std::string out_path;
  std::string means_format = "csv";
  std::string verify_format = "json";
  std::string extremal_format = "json";
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--config", config_path, "JSON object of flag values, overridden by explicit flags");

  MeansFlags means_flags;
  CLI::App* means_cmd = app.add_subcommand("means", "Table of M_p for a polynomial file");
  means_cmd->add_option("--poly", means_flags.poly, "Polynomial JSON file");
  means_cmd->add_option("--p", means_flags.p, "Orders: 0, positive decimals, inf")->delimiter(',')->capture_default_str();
  add_quad_flags(*means_cmd, means_flags.quad);

  VerifyFlags verify_flags;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a claim on sampled polynomials, writing JSON lines");
  verify_cmd->add_option("--claim", verify_flags.claim, "thm-1-1, thm-1-2, thm-1-3, lemma-2-1, lemma-2-2, equality-case, "
                                                        "monotone-p, identity-3-1, identity-3-2");
  verify_cmd->add_option("--distribution", verify_flags.distribution,
                         "coeff-gaussian, roots-in-disk, roots-outside, roots-mixed, roots-on-circle")
      ->capture_default_str();
  verify_cmd->add_option("--n", verify_flags.n, "Class bound")->capture_default_str();
  verify_cmd->add_option("--count", verify_flags.count, "Number of samples")->capture_default_str();
  verify_cmd->add_option("--tol", verify_flags.tol, "Relative tolerance (default depends on the claim)");
  verify_cmd->add_option("--p", verify_flags.p, "Orders for thm-1-3")->delimiter(',');
  verify_cmd->add_option("--p-grid", verify_flags.p_grid, "Ascending orders for monotone-p")->delimiter(',');
  verify_cmd->add_option("--poly", verify_flags.poly, "Check this polynomial file instead of samples");
  verify_cmd->add_option("--witness", verify_flags.witness, "Write the worst report here");
  verify_cmd->add_option("--jobs", verify_flags.jobs, "Worker threads, 0 = available parallelism")
      ->capture_default_str();
  add_quad_flags(*verify_cmd, verify_flags.quad);

  ExtremalFlags extremal_flags;
  CLI::App* extremal_cmd = app.add_subcommand("extremal", "Maximize M_p(T')/(n M_p(T)) by Nelder-Mead");
  extremal_cmd->add_option("--n", extremal_flags.n, "Class bound")->capture_default_str();
  extremal_cmd->add_option("--p", extremal_flags.p, "Order: 0, positive decimal, inf")->capture_default_str();
  extremal_cmd->add_option("--restarts", extremal_flags.restarts)->capture_default_str();
  extremal_cmd->add_option("--budget", extremal_flags.budget, "Evaluations per restart")->capture_default_str();
  extremal_cmd->add_option("--threshold", extremal_flags.threshold, "Smallest acceptable best ratio")
      ->capture_default_str();

  for (auto [sub, format] : {std::pair{means_cmd, &means_format}, std::pair{verify_cmd, &verify_format},
                             std::pair{extremal_cmd, &extremal_format}}) {
    sub->add_option("--seed", seed_flag, "RNG seed (default: $BERNSTEIN_LAB_SEED, else 0)");
    sub->add_option("--format", *format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", out_path, "Output file (default stdout)");
    sub->add_option("--save-config", save_config, "Write the effective settings as a --config file");
    sub->add_option("--config", config_path, "JSON object of flag values, overridden by explicit flags");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!config_path.empty()) {
      merge_config(*sub, config_path);
    }
    std::uint64_t seed = 0;
    if (seed_flag) {
      seed = *seed_flag;
    } else if (const char* env = std::getenv("BERNSTEIN_LAB_SEED"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        seed = std::stoull(env, &used);
        if (env[used] != '\0') {
          throw std::invalid_argument("trailing characters");
        }
      } catch (const std::exception&) {
        throw InvalidArgument(std::string("BERNSTEIN_LAB_SEED is not an unsigned integer: '") + env + "'");
      }
    }
    if (!save_config.empty()) {
      Json config = effective_config(*sub);
      config["seed"] = std::to_string(seed);
      Output file(save_config);
      file.stream() << dump(config) << '\n';
    }
    if (sub == means_cmd) {
      return run_means(means_flags, means_format, out_path);
    }
    if (sub == verify_cmd) {
      return run_verify(verify_flags, seed, verify_format, out_path);
    }
    return run_extremal(extremal_flags, seed, extremal_format, out_path);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error at line %d, column %d: %s\n", e.line(), e.column(), e.what());
    return kUsage;
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const NumericFailure& e) {
    std::fprintf(stderr, "numeric failure: %s (residual %s)\n", e.what(), format_double(e.residual()).c_str());
    return kNumeric;
  } catch (const InconsistencyError& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return kNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
}
