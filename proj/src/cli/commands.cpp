#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hardy/weights.hpp"

namespace hardy::cli {
namespace {

std::int64_t as_int(Index n) { return static_cast<std::int64_t>(n); }

WeightFunction weight_for(WeightKind kind, double epsilon) {
  switch (kind) {
    case WeightKind::kImproved: return improved_weight();
    case WeightKind::kClassical: return classical_weight();
    case WeightKind::kInflated: return inflated_improved_weight(epsilon);
  }
  throw std::invalid_argument("unknown weight kind");
}

std::string weight_label(WeightKind kind) {
  switch (kind) {
    case WeightKind::kImproved: return "improved";
    case WeightKind::kClassical: return "classical";
    case WeightKind::kInflated: return "inflated";
  }
  return "?";
}

nlohmann::ordered_json eigen_rows_json(const std::vector<EigenScanRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"N", r.size}, {"lambda_min", r.lambda_min}, {"monotone", r.monotone}, {"below_one", r.below_one}});
  }
  return out;
}

nlohmann::ordered_json report_json(const VerificationReport& report) {
  const VerificationConfig& c = report.config;
  nlohmann::ordered_json j;
  j["passed"] = report.passed();
  j["config"] = {{"seed", c.seed},
                 {"gap_trials", c.gap_trials},
                 {"identity_trials", c.identity_trials},
                 {"equivalence_trials", c.equivalence_trials},
                 {"max_support", c.max_support},
                 {"amplitude", c.amplitude},
                 {"residual_n_max", c.residual_n_max},
                 {"eigen_sizes", c.eigen_sizes},
                 {"inflation_epsilon", c.inflation_epsilon}};
  j["support"] = {{"min", report.support.min},
                  {"max", report.support.max},
                  {"mean", report.support.mean},
                  {"histogram", report.support.histogram}};
  j["min_relative_gap"] = report.min_relative_gap;
  j["max_residual"] = report.max_residual;
  j["eigen"] = eigen_rows_json(report.eigen);
  j["inflated_eigen"] = eigen_rows_json(report.inflated_eigen);
  j["inflated_eigen_note"] = "exploratory: optimality of the weight is not asserted";
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    checks.push_back({{"name", check.name},
                      {"value", check.value},
                      {"tolerance", check.tolerance},
                      {"passed", check.passed},
                      {"informational", check.informational}});
  }
  j["checks"] = std::move(checks);
  return j;
}

std::vector<std::pair<std::string, double>> report_tolerances(const VerificationConfig& c) {
  return {{"gap", c.gap_tol},
          {"identity", c.identity_tol},
          {"equivalence", c.equivalence_tol},
          {"residual", c.residual_tol},
          {"eigen_bisection", c.eigen_tol},
          {"eigen_floor", c.eigen_floor_tol},
          {"eigen_exact", c.eigen_exact_tol}};
}

std::string join_command(const std::vector<std::string>& args) {
  std::string out = "hardy";
  for (const auto& a : args) out += " " + a;
  return out;
}

}  // namespace

OutputRecord weights_record(Index n_max, Index K, std::optional<unsigned> precision) {
  if (n_max == 0) throw std::invalid_argument("--n-max must be >= 1");
  if (K == 0) throw std::invalid_argument("--k-max must be >= 1");
  OutputRecord record;
  record.table.columns = {"n", "w_closed", "w_series", "w_classical", "ratio"};
  if (precision) {
    record.table.columns.push_back("w_closed_extended");
    record.table.columns.push_back("extended_rel_diff");
  }
  for (Index n = 1; n <= n_max; ++n) {
    const double closed = improved_weight_closed(n);
    const double classical = classical_hardy_weight(n).to_double();
    std::vector<Cell> row{as_int(n), closed, n >= 2 ? Cell(improved_weight_series(n, K)) : Cell(std::monostate{}),
                          classical, closed / classical};
    if (precision) {
      const Precision p{*precision};
      const ExtendedReal exact = improved_weight_closed(n, p);
      row.emplace_back(exact.to_string(*precision));
      row.emplace_back((abs(ExtendedReal(closed, p) - exact) / exact).to_double());
    }
    record.table.rows.push_back(std::move(row));
  }
  return record;
}

OutputRecord coeffs_record(Index k_max) {
  if (k_max == 0) throw std::invalid_argument("--k-max must be >= 1");
  OutputRecord record;
  record.table.columns = {"k", "numerator", "denominator", "value"};
  for (Index k = 1; k <= k_max; ++k) {
    const ExactRational c = series_coefficient(k);
    record.table.rows.push_back({as_int(k), c.numerator().str(), c.denominator().str(), c.to_double()});
  }
  return record;
}

OutputRecord verify_record(const VerificationConfig& config, bool& passed) {
  const VerificationReport report = run_verification(config);
  passed = report.passed();

  OutputRecord record;
  record.seed = config.seed;
  record.tolerances = report_tolerances(config);
  record.table.columns = {"section", "name", "value", "tolerance", "passed", "informational"};
  auto& rows = record.table.rows;
  for (const auto& check : report.checks) {
    rows.push_back({std::string("check"), check.name, check.value, check.tolerance, check.passed, check.informational});
  }
  const std::monostate none;
  rows.push_back({std::string("support"), std::string("min"), static_cast<double>(report.support.min), none, none, true});
  rows.push_back({std::string("support"), std::string("max"), static_cast<double>(report.support.max), none, none, true});
  rows.push_back({std::string("support"), std::string("mean"), report.support.mean, none, none, true});
  for (std::size_t b = 0; b < report.support.histogram.size(); ++b) {
    rows.push_back({std::string("support"), "bin_" + std::to_string(b), static_cast<double>(report.support.histogram[b]),
                    none, none, true});
  }
  for (const auto& r : report.eigen) {
    rows.push_back({std::string("eigen"), "N=" + std::to_string(r.size), r.lambda_min, config.eigen_tol,
                    r.monotone && r.lambda_min >= 1.0 - config.eigen_floor_tol, false});
  }
  for (const auto& r : report.inflated_eigen) {
    rows.push_back({std::string("eigen_inflated"), "N=" + std::to_string(r.size), r.lambda_min, config.eigen_tol,
                    !r.below_one, true});
  }
  rows.push_back({std::string("verdict"), std::string("all_hard_checks"), passed ? 1.0 : 0.0, none, passed, false});
  record.extra["report"] = report_json(report);
  return record;
}

OutputRecord eigen_record(const std::vector<Index>& sizes, WeightKind kind, double epsilon, double tol, bool& flagged) {
  if (!(tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  const auto rows = eigen_scan(sizes, weight_for(kind, epsilon), tol);
  flagged = false;
  OutputRecord record;
  record.tolerances = {{"bisection", tol}};
  record.table.columns = {"N", "lambda_min", "monotone", "below_one"};
  for (const auto& r : rows) {
    if (kind == WeightKind::kImproved && (!r.monotone || r.lambda_min < 1.0 - 1e-10)) flagged = true;
    record.table.rows.push_back({as_int(r.size), r.lambda_min, r.monotone, r.below_one});
  }
  record.extra["weight"] = weight_label(kind);
  if (kind == WeightKind::kInflated) {
    record.extra["epsilon"] = epsilon;
    record.extra["note"] = "exploratory: optimality of the weight is not asserted";
  }
  return record;
}

OutputRecord residual_record(Index n_max, WeightKind kind, double tol, std::optional<unsigned> precision, bool& failed) {
  if (n_max == 0) throw std::invalid_argument("--n-max must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  const WeightFunction u = ground_state_weight();
  const WeightFunction w = weight_for(kind, 0.0);
  const double residual = ground_state_residual(u, [&w](Index n) { return w(n); }, n_max);
  failed = kind == WeightKind::kImproved && residual > tol;

  OutputRecord record;
  record.tolerances = {{"residual", tol}};
  record.table.columns = {"weight", "n_max", "max_relative_residual", "passed"};
  std::vector<Cell> row{weight_label(kind), as_int(n_max), residual, kind == WeightKind::kImproved ? Cell(!failed) : Cell()};
  if (precision) {
    const Precision p{*precision};
    ExtendedReal worst(p);
    for (Index n = 1; n <= n_max; ++n) {
      const ExtendedReal center = u.extended(n, p);
      const ExtendedReal lap = ExtendedReal(2L, p) * center - u.extended(n - 1, p) - u.extended(n + 1, p);
      const ExtendedReal r = abs(lap - w.extended(n, p) * center) / center;
      if (r > worst) worst = r;
    }
    record.table.columns.push_back("max_relative_residual_extended");
    row.emplace_back(worst.to_string(std::min(*precision, 20u)));
  }
  record.table.rows.push_back(std::move(row));
  return record;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Improved discrete Hardy weight: tables, identity checks, verification and spectral scans", "hardy"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  std::optional<unsigned> precision;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Write to this file instead of stdout");
    sub->add_option("--precision", precision, "Extended-precision cross-check with this many decimal digits")
        ->check(CLI::Range(17u, 10000u));
  };

  std::uint64_t n_max = 0;
  std::uint64_t k_max = 25;
  auto* weights = app.add_subcommand("weights", "Tabulate the improved, series and classical weights");
  weights->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  weights->add_option("--k-max", k_max, "Series truncation order K")->capture_default_str()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000}));
  add_common(weights);

  std::uint64_t coeff_k_max = 0;
  auto* coeffs = app.add_subcommand("coeffs", "Exact series coefficients");
  coeffs->add_option("--k-max", coeff_k_max, "Largest k")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
  add_common(coeffs);

  VerificationConfig config;
  std::uint64_t trials = config.gap_trials;
  double verify_tol = config.gap_tol;
  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  verify->add_option("--trials", trials, "Random Hardy-gap trials")->capture_default_str()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  verify->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  verify->add_option("--max-support", config.max_support, "Largest random support bound")->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  verify->add_option("--tol", verify_tol, "Tolerance for inequality and identity checks")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--threads", config.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_common(verify);

  std::vector<std::uint64_t> n_list;
  std::string weight_name = "improved";
  double epsilon = 0.05;
  double eigen_tol = 1e-10;
  auto* eigen = app.add_subcommand("eigen", "Smallest eigenvalue of truncated sections A phi = lambda W phi");
  eigen->add_option("--n-list", n_list, "Truncation sizes")->required()->delimiter(',')->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  eigen->add_option("--weight", weight_name, "improved | classical | inflated")->capture_default_str()
      ->check(CLI::IsMember({"improved", "classical", "inflated"}));
  eigen->add_option("--epsilon", epsilon, "Inflation for --weight inflated: (1 + epsilon) w")->capture_default_str();
  eigen->add_option("--tol", eigen_tol, "Bisection tolerance")->capture_default_str();
  add_common(eigen);

  std::uint64_t residual_n_max = 100000;
  std::string residual_weight = "improved";
  double residual_tol = 1e-12;
  auto* residual = app.add_subcommand("residual", "Relative residual of (Δ - w) sqrt(n)");
  residual->add_option("--n-max", residual_n_max, "Largest n")->capture_default_str()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  residual->add_option("--weight", residual_weight, "improved | classical")->capture_default_str()->check(CLI::IsMember({"improved", "classical"}));
  residual->add_option("--tol", residual_tol, "Pass threshold for the improved weight")->capture_default_str();
  add_common(residual);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  OutputRecord record;
  int code = kOk;
  try {
    if (*weights) {
      record = weights_record(n_max, k_max, precision);
    } else if (*coeffs) {
      record = coeffs_record(coeff_k_max);
    } else if (*verify) {
      config.gap_trials = trials;
      config.identity_trials = std::min<std::size_t>(trials, 1000);
      config.equivalence_trials = std::min<std::size_t>(trials, 1000);
      config.gap_tol = config.identity_tol = config.equivalence_tol = config.residual_tol = verify_tol;
      config.precision_digits = precision;
      bool passed = false;
      record = verify_record(config, passed);
      code = passed ? kOk : kCheckFailed;
    } else if (*eigen) {
      std::vector<Index> sizes(n_list.begin(), n_list.end());
      const WeightKind kind = weight_name == "improved"    ? WeightKind::kImproved
                              : weight_name == "classical" ? WeightKind::kClassical
                                                           : WeightKind::kInflated;
      bool flagged = false;
      record = eigen_record(sizes, kind, epsilon, eigen_tol, flagged);
      code = flagged ? kCheckFailed : kOk;
    } else if (*residual) {
      const WeightKind kind = residual_weight == "improved" ? WeightKind::kImproved : WeightKind::kClassical;
      bool failed = false;
      record = residual_record(residual_n_max, kind, residual_tol, precision, failed);
      code = failed ? kCheckFailed : kOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  record.command = join_command(args);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kUsageError;
    }
    sink = &file;
  }
  if (format == "json") {
    write_json(record, *sink);
  } else {
    write_csv(record, *sink);
  }
  return code;
}

}  // namespace hardy::cli
