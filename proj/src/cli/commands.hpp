#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/output.hpp"
#include "hardy/verifier.hpp"

namespace hardy::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

enum class WeightKind { kImproved, kClassical, kInflated };

// Record builders, one per subcommand. They throw std::invalid_argument on
// bad arguments.

/// Rows (n, w_closed, w_series, w_classical, ratio) for n = 1..n_max; w_series
/// is empty at n = 1. With `precision`, adds the extended-precision closed
/// form and its relative difference from the double value.
OutputRecord weights_record(Index n_max, Index K, std::optional<unsigned> precision);

/// Rows (k, numerator, denominator, value) for k = 1..k_max.
OutputRecord coeffs_record(Index k_max);

/// One row per check plus the support histogram and eigenvalue tables; the
/// full report is attached under "report" in JSON.
OutputRecord verify_record(const VerificationConfig& config, bool& passed);

/// Rows (N, lambda_min, monotone, below_one). `flagged` is set when the
/// improved weight shows a monotonicity violation or lambda_min < 1.
OutputRecord eigen_record(const std::vector<Index>& sizes, WeightKind kind, double epsilon, double tol, bool& flagged);

/// Single-row table with the maximum relative residual of (Δ - w) sqrt over
/// 1..n_max. `failed` is set for the improved weight above `tol`.
OutputRecord residual_record(Index n_max, WeightKind kind, double tol, std::optional<unsigned> precision, bool& failed);

/// Parses argv-style arguments (without the program name), runs the
/// subcommand, writes the record to `out` or the --out file, and returns the
/// exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
