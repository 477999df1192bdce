#pragma once

// Numerical verification of the improved Hardy inequality
//
//   sum_n (phi(n) - phi(n-1))^2 >= sum_n w(n) phi(n)^2,   phi in C_c(N), phi(0) = 0,
//
// and of the operator identities behind it: seeded random trials, the
// ground-state residual, the classical p = 2 formulation, and a spectral scan
// of truncated sections.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardy/compact_sequence.hpp"
#include "hardy/weight_function.hpp"

namespace hardy {

/// energy(phi) - sum_{n>=1} w(n) phi(n)^2.
double hardy_gap(const CompactSequence& phi, const WeightFunction& w);

/// Classical p = 2 gap for non-negative increments a supported in 1..N:
///   sum_{n<=N} a(n)^2 - sum_{n<=N} ((a(1) + ... + a(n)) / (2n))^2.
/// Computed through the phi-formulation: phi = partial sums of a on 1..N, then
/// sum_{n<=N} (phi(n) - phi(n-1))^2 - sum_{n<=N} phi(n)^2 / (4n^2). This is
/// hardy_gap(phi, classical weight) without the cutoff edge phi(N)^2, summed
/// directly to avoid cancelling against it. Throws std::invalid_argument on a
/// negative entry.
double classical_gap_from_increments(const CompactSequence& increments);

/// Same quantity by direct summation of the classical statement.
double classical_gap_direct(const CompactSequence& increments);

/// max_{1<=n<=N} |(Δu)(n) - w(n)u(n)| / u(n), u evaluated pointwise with u(0) = 0.
double ground_state_residual(const WeightFunction& u, const Potential& w, Index N);

struct EigenScanRow {
  Index size = 0;
  double lambda_min = 0.0;
  /// lambda_min(N) <= lambda_min(previous N) + 2 tol; true for the first row.
  bool monotone = true;
  bool below_one = false;
};

/// lambda_min for each truncation size, rows sorted by size. Throws on a
/// zero size or non-positive tol.
std::vector<EigenScanRow> eigen_scan(std::vector<Index> sizes, const WeightFunction& w, double tol);

struct VerificationConfig {
  std::uint64_t seed = 42;
  std::size_t gap_trials = 10000;
  std::size_t identity_trials = 1000;
  std::size_t equivalence_trials = 1000;
  Index max_support = 1000;
  double amplitude = 1.0;
  Index residual_n_max = 100000;
  std::vector<Index> eigen_sizes = {1, 10, 100, 1000, 10000};
  double inflation_epsilon = 0.05;

  double gap_tol = 1e-12;
  double identity_tol = 1e-12;
  double equivalence_tol = 1e-12;
  double residual_tol = 1e-12;
  /// Bisection accuracy of the spectral scan.
  double eigen_tol = 1e-13;
  double eigen_floor_tol = 1e-10;
  double eigen_exact_tol = 1e-12;

  /// When set, the double closed form is cross-checked against this many digits.
  std::optional<unsigned> precision_digits;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws std::invalid_argument naming the first invalid field.
  void validate() const;
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Reported but excluded from the verdict.
  bool informational = false;
};

struct SupportStats {
  Index min = 0;
  Index max = 0;
  double mean = 0.0;
  /// Ten equal-width bins over 1..max_support.
  std::vector<std::size_t> histogram;
};

struct VerificationReport {
  VerificationConfig config;
  SupportStats support;
  double min_relative_gap = 0.0;
  double max_residual = 0.0;
  std::vector<EigenScanRow> eigen;
  std::vector<EigenScanRow> inflated_eigen;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Runs the configured battery. Trials may run on several threads; each trial
/// draws from derive_seed(derive_seed(seed, stream), index) and results are reduced in
/// index order, so the report depends only on the configuration.
VerificationReport run_verification(const VerificationConfig& config);

}  // namespace hardy
