#include "hardy/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "hardy/operators.hpp"
#include "hardy/random.hpp"
#include "hardy/spectral.hpp"
#include "hardy/weights.hpp"

namespace hardy {
namespace {

// Independent random streams per battery.
enum Stream : std::uint64_t { kGapStream = 1, kIdentityStream = 2, kEquivalenceStream = 3, kWeightStream = 4 };

std::uint64_t trial_seed(std::uint64_t master, Stream stream, std::size_t index) {
  return derive_seed(derive_seed(master, stream), index);
}

// results[i] = fn(i), computed on up to `threads` workers with static striping.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<Result> results(count);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += workers) results[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

double relative(double defect, double scale) { return defect / std::max(scale, std::numeric_limits<double>::min()); }

struct GapTrial {
  Index support = 0;
  double relative_gap = 0.0;
  double dominance_defect = 0.0;
  double excess = 0.0;
};

struct IdentityTrial {
  double green = 0.0;
  double green_form = 0.0;
  double gst = 0.0;
  double unitarity = 0.0;
  double energy_identity = 0.0;
};

struct EquivalenceTrial {
  double defect = 0.0;
  double gap = 0.0;
};

}  // namespace

double hardy_gap(const CompactSequence& phi, const WeightFunction& w) {
  double weighted = 0.0;
  for (Index n = 1; n <= phi.support_bound(); ++n) weighted += w(n) * phi(n) * phi(n);
  return energy(phi) - weighted;
}

double classical_gap_from_increments(const CompactSequence& increments) {
  const Index N = increments.support_bound();
  std::vector<double> partial(N);
  double running = 0.0;
  for (Index n = 1; n <= N; ++n) {
    const double a = increments(n);
    if (!(a >= 0.0)) throw std::invalid_argument("classical Hardy increments must be non-negative (entry " + std::to_string(n) + ")");
    running += a;
    partial[n - 1] = running;
  }
  const CompactSequence phi(std::move(partial));
  // Energy over the edges (0,1), ..., (N-1,N) only; the cutoff edge (N,N+1)
  // belongs to the truncation, not to the classical statement.
  double open_energy = 0.0;
  double weighted = 0.0;
  const WeightFunction w_classical = classical_weight();
  for (Index n = 1; n <= N; ++n) {
    const double d = phi(n) - phi(n - 1);
    open_energy += d * d;
    weighted += w_classical(n) * phi(n) * phi(n);
  }
  return open_energy - weighted;
}

double classical_gap_direct(const CompactSequence& increments) {
  double squares = 0.0;
  double averages = 0.0;
  double running = 0.0;
  for (Index n = 1; n <= increments.support_bound(); ++n) {
    const double a = increments(n);
    if (!(a >= 0.0)) throw std::invalid_argument("classical Hardy increments must be non-negative (entry " + std::to_string(n) + ")");
    squares += a * a;
    running += a;
    const double mean = running / (2.0 * static_cast<double>(n));
    averages += mean * mean;
  }
  return squares - averages;
}

double ground_state_residual(const WeightFunction& u, const Potential& w, Index N) {
  if (N == 0) throw std::invalid_argument("ground_state_residual: N must be >= 1");
  double worst = 0.0;
  for (Index n = 1; n <= N; ++n) {
    const double center = u(n);
    const double laplacian = 2.0 * center - u(n - 1) - u(n + 1);
    worst = std::max(worst, std::abs(laplacian - w(n) * center) / center);
  }
  return worst;
}

std::vector<EigenScanRow> eigen_scan(std::vector<Index> sizes, const WeightFunction& w, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvalue tolerance must be positive");
  if (sizes.empty()) throw std::invalid_argument("eigenvalue scan needs at least one truncation size");
  std::sort(sizes.begin(), sizes.end());
  std::vector<EigenScanRow> rows;
  for (Index N : sizes) {
    if (N == 0) throw std::invalid_argument("truncation size N must be >= 1");
    EigenScanRow row;
    row.size = N;
    row.lambda_min = min_generalized_eigenvalue(TruncatedOperatorPair::from_weight(N, w), tol);
    row.below_one = row.lambda_min < 1.0;
    if (!rows.empty()) row.monotone = row.lambda_min <= rows.back().lambda_min + 2.0 * tol;
    rows.push_back(row);
  }
  return rows;
}

void VerificationConfig::validate() const {
  auto require = [](bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
  };
  require(gap_trials >= 1, "gap_trials must be >= 1");
  require(identity_trials >= 1, "identity_trials must be >= 1");
  require(equivalence_trials >= 1, "equivalence_trials must be >= 1");
  require(max_support >= 1, "max_support must be >= 1");
  require(amplitude > 0.0 && std::isfinite(amplitude), "amplitude must be positive");
  require(residual_n_max >= 1, "residual_n_max must be >= 1");
  require(!eigen_sizes.empty(), "eigen_sizes must not be empty");
  for (Index N : eigen_sizes) require(N >= 1, "eigen_sizes entries must be >= 1");
  require(inflation_epsilon > -1.0, "inflation_epsilon must exceed -1");
  for (double tol : {gap_tol, identity_tol, equivalence_tol, residual_tol, eigen_tol, eigen_floor_tol, eigen_exact_tol}) {
    require(tol > 0.0 && std::isfinite(tol), "tolerances must be positive");
  }
  if (precision_digits) require(*precision_digits >= 17, "precision must be at least 17 digits");
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.informational || c.passed; });
}

VerificationReport run_verification(const VerificationConfig& config) {
  config.validate();
  const unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());

  VerificationReport report;
  report.config = config;
  auto add_check = [&](std::string name, double value, double tolerance, bool passed, bool informational = false) {
    report.checks.push_back({std::move(name), value, tolerance, passed, informational});
  };

  const WeightFunction improved = improved_weight();
  const WeightFunction classical = classical_weight();

  // Random Hardy-gap trials against the improved and the classical weight.
  const auto gaps = parallel_map<GapTrial>(config.gap_trials, threads, [&](std::size_t i) {
    const CompactSequence phi = random_test_sequence(trial_seed(config.seed, kGapStream, i), config.max_support, config.amplitude);
    const double e = energy(phi);
    const double scale = std::max(1.0, e);
    const double gap_improved = hardy_gap(phi, improved);
    const double gap_classical = hardy_gap(phi, classical);
    double excess = 0.0;
    for (Index n = 1; n <= phi.support_bound(); ++n) excess += (improved(n) - classical(n)) * phi(n) * phi(n);
    GapTrial t;
    t.support = phi.support_bound();
    t.relative_gap = gap_improved / scale;
    t.dominance_defect = std::abs(gap_classical - gap_improved - excess) / scale;
    t.excess = excess;
    return t;
  });

  SupportStats& stats = report.support;
  stats.min = std::numeric_limits<Index>::max();
  stats.histogram.assign(10, 0);
  double support_sum = 0.0;
  double min_rel_gap = std::numeric_limits<double>::infinity();
  double max_dominance = 0.0;
  double min_excess = std::numeric_limits<double>::infinity();
  for (const GapTrial& t : gaps) {
    stats.min = std::min(stats.min, t.support);
    stats.max = std::max(stats.max, t.support);
    support_sum += static_cast<double>(t.support);
    const std::size_t bin = std::min<std::size_t>(9, (t.support - 1) * 10 / config.max_support);
    ++stats.histogram[bin];
    min_rel_gap = std::min(min_rel_gap, t.relative_gap);
    max_dominance = std::max(max_dominance, t.dominance_defect);
    min_excess = std::min(min_excess, t.excess);
  }
  stats.mean = support_sum / static_cast<double>(gaps.size());
  report.min_relative_gap = min_rel_gap;
  add_check("hardy_gap_min_relative", min_rel_gap, config.gap_tol, min_rel_gap >= -config.gap_tol);
  add_check("dominance_identity_max_defect", max_dominance, config.gap_tol, max_dominance <= config.gap_tol);
  add_check("dominance_min_excess", min_excess, 0.0, min_excess > 0.0);

  // Operator identities on random (u, phi); even instances use u = sqrt.
  const WeightFunction sqrt_weight = ground_state_weight();
  const auto identities = parallel_map<IdentityTrial>(config.identity_trials, threads, [&](std::size_t i) {
    const std::uint64_t seed = trial_seed(config.seed, kIdentityStream, i);
    const WeightFunction u = (i % 2 == 0) ? sqrt_weight : random_positive_weight(trial_seed(config.seed, kWeightStream, i), 0.5, 2.0);
    const CompactSequence phi = random_test_sequence(seed, config.max_support, config.amplitude);
    const Potential w = potential_from_positive_solution(u);

    IdentityTrial t;
    const double form = weighted_form(u, phi);
    const double green_lhs = weighted_inner(apply_weighted_laplacian(u, phi), phi, u.squared());
    t.green = relative(std::abs(green_lhs - form), form);
    t.green_form = form;

    const CompactSequence weighted = apply_weighted_laplacian(u, phi);
    double scale = 1.0;
    for (double v : weighted.values()) scale = std::max(scale, std::abs(v));
    t.gst = gst_defect(u, w, phi) / scale;

    t.unitarity = relative(unitarity_defect(u, phi), weighted_inner(phi, phi, u.squared()));

    const double e = energy(phi);
    t.energy_identity = relative(std::abs(e - inner(apply_dirichlet_laplacian(phi), phi)), e);
    return t;
  });
  IdentityTrial worst;
  worst.green_form = std::numeric_limits<double>::infinity();
  for (const IdentityTrial& t : identities) {
    worst.green = std::max(worst.green, t.green);
    worst.green_form = std::min(worst.green_form, t.green_form);
    worst.gst = std::max(worst.gst, t.gst);
    worst.unitarity = std::max(worst.unitarity, t.unitarity);
    worst.energy_identity = std::max(worst.energy_identity, t.energy_identity);
  }
  add_check("green_formula_max_relative", worst.green, config.identity_tol, worst.green <= config.identity_tol);
  add_check("weighted_form_min", worst.green_form, 0.0, worst.green_form >= 0.0);
  add_check("gst_defect_max_relative", worst.gst, config.identity_tol, worst.gst <= config.identity_tol);
  add_check("unitarity_defect_max_relative", worst.unitarity, config.identity_tol, worst.unitarity <= config.identity_tol);
  add_check("energy_identity_max_relative", worst.energy_identity, config.identity_tol,
            worst.energy_identity <= config.identity_tol);

  // Classical p = 2 statement, two routes.
  const auto equivalences = parallel_map<EquivalenceTrial>(config.equivalence_trials, threads, [&](std::size_t i) {
    const CompactSequence a =
        random_nonnegative_sequence(trial_seed(config.seed, kEquivalenceStream, i), config.max_support, config.amplitude);
    const double via_phi = classical_gap_from_increments(a);
    const double direct = classical_gap_direct(a);
    return EquivalenceTrial{relative(std::abs(via_phi - direct), std::abs(direct)), via_phi};
  });
  double max_equiv = 0.0;
  double min_classical_gap = std::numeric_limits<double>::infinity();
  for (const EquivalenceTrial& t : equivalences) {
    max_equiv = std::max(max_equiv, t.defect);
    min_classical_gap = std::min(min_classical_gap, t.gap);
  }
  add_check("formulation_equivalence_max_relative", max_equiv, config.equivalence_tol, max_equiv <= config.equivalence_tol);
  add_check("classical_gap_min", min_classical_gap, 0.0, min_classical_gap >= 0.0);

  // (Δ - w) sqrt = 0.
  const Potential improved_potential = [&improved](Index n) { return improved(n); };
  report.max_residual = ground_state_residual(sqrt_weight, improved_potential, config.residual_n_max);
  add_check("ground_state_residual", report.max_residual, config.residual_tol, report.max_residual <= config.residual_tol);
  const Potential classical_potential = [&classical](Index n) { return classical(n); };
  const double classical_residual = ground_state_residual(sqrt_weight, classical_potential, std::min<Index>(10, config.residual_n_max));
  add_check("classical_weight_residual", classical_residual, 0.0, classical_residual > 0.0, true);

  if (config.precision_digits) {
    const Precision precision{*config.precision_digits};
    constexpr double kClosedFormTol = 4e-16;
    double worst_closed = 0.0;
    const Index limit = std::min<Index>(config.residual_n_max, 1000);
    for (Index n = 1; n <= limit; ++n) {
      const ExtendedReal exact = improved_weight_closed(n, precision);
      const ExtendedReal diff = abs(ExtendedReal(improved_weight_closed(n), precision) - exact) / exact;
      worst_closed = std::max(worst_closed, diff.to_double());
    }
    add_check("closed_form_extended_agreement", worst_closed, kClosedFormTol, worst_closed <= kClosedFormTol);
  }

  // Spectral scan of truncated sections.
  report.eigen = eigen_scan(config.eigen_sizes, improved, config.eigen_tol);
  for (const EigenScanRow& row : report.eigen) {
    if (row.size == 1) {
      const double defect = std::abs(row.lambda_min - (2.0 + std::numbers::sqrt2));
      add_check("eigen_single_site_exact", defect, config.eigen_exact_tol, defect <= config.eigen_exact_tol);
    }
  }
  const bool monotone = std::all_of(report.eigen.begin(), report.eigen.end(), [](const EigenScanRow& r) { return r.monotone; });
  add_check("eigen_monotone", monotone ? 1.0 : 0.0, 2.0 * config.eigen_tol, monotone);
  double eigen_min = std::numeric_limits<double>::infinity();
  for (const EigenScanRow& row : report.eigen) eigen_min = std::min(eigen_min, row.lambda_min);
  add_check("eigen_min_above_one", eigen_min, config.eigen_floor_tol, eigen_min >= 1.0 - config.eigen_floor_tol);

  report.inflated_eigen = eigen_scan(config.eigen_sizes, inflated_improved_weight(config.inflation_epsilon), config.eigen_tol);
  double inflated_min = std::numeric_limits<double>::infinity();
  for (const EigenScanRow& row : report.inflated_eigen) inflated_min = std::min(inflated_min, row.lambda_min);
  add_check("inflated_eigen_min", inflated_min, 1.0, inflated_min < 1.0, true);

  return report;
}

}  // namespace hardy
