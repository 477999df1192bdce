#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hardy/extended_real.hpp"
#include "hardy/operators.hpp"
#include "hardy/random.hpp"
#include "hardy/verifier.hpp"
#include "hardy/weights.hpp"

using namespace hardy;

namespace {

VerificationConfig small_config() {
  VerificationConfig config;
  config.gap_trials = 400;
  config.identity_trials = 100;
  config.equivalence_trials = 100;
  config.max_support = 200;
  config.residual_n_max = 2000;
  config.eigen_sizes = {1, 10, 100};
  return config;
}

void check_identical(const VerificationReport& a, const VerificationReport& b) {
  CHECK(a.min_relative_gap == b.min_relative_gap);
  CHECK(a.max_residual == b.max_residual);
  CHECK(a.support.min == b.support.min);
  CHECK(a.support.max == b.support.max);
  CHECK(a.support.mean == b.support.mean);
  CHECK(a.support.histogram == b.support.histogram);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].value == b.checks[i].value);
    CHECK(a.checks[i].passed == b.checks[i].passed);
  }
  REQUIRE(a.eigen.size() == b.eigen.size());
  for (std::size_t i = 0; i < a.eigen.size(); ++i) CHECK(a.eigen[i].lambda_min == b.eigen[i].lambda_min);
}

}  // namespace

TEST_CASE("hardy gap at the stated points") {
  CHECK(hardy_gap(CompactSequence::delta(1), improved_weight()) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(hardy_gap(CompactSequence::delta(1), classical_weight()) == 1.75);
  CHECK(hardy_gap(CompactSequence::zeros(5), improved_weight()) == 0.0);
}

TEST_CASE("hardy gap on the near-ground-state cutoff against extended precision") {
  const Index N = 1000;
  const CompactSequence phi = CompactSequence::tabulate(N, [&](Index n) {
    const double x = static_cast<double>(n);
    return std::sqrt(x) * std::max(0.0, 1.0 - x / 1000.0);
  });
  const Precision p{60};
  ExtendedReal e_energy(p);
  ExtendedReal e_mass(p);
  auto phi_ext = [&](Index n) {
    if (n == 0 || n >= N) return ExtendedReal(p);
    const ExtendedReal x(static_cast<long>(n), p);
    return sqrt(x) * (ExtendedReal(1L, p) - x / ExtendedReal(1000L, p));
  };
  for (Index n = 1; n <= N + 1; ++n) {
    const ExtendedReal d = phi_ext(n) - phi_ext(n - 1);
    e_energy = e_energy + d * d;
  }
  for (Index n = 1; n <= N; ++n) {
    const ExtendedReal v = phi_ext(n);
    e_mass = e_mass + improved_weight_closed(n, p) * v * v;
  }
  const double expected = (e_energy - e_mass).to_double();
  const double gap = hardy_gap(phi, improved_weight());
  CHECK(expected > 0.0);
  CHECK(gap > 0.0);
  CHECK(std::abs(gap - expected) <= 1e-12 * e_energy.to_double());
}

TEST_CASE("classical gap from increments") {
  CHECK(classical_gap_from_increments(CompactSequence::delta(1)) == 0.75);
  CHECK(classical_gap_from_increments(CompactSequence::zeros(4)) == 0.0);
  const CompactSequence ones(std::vector<double>(100, 1.0));
  CHECK(classical_gap_from_increments(ones) == doctest::Approx(75.0).epsilon(1e-15));
  CHECK(classical_gap_direct(ones) == doctest::Approx(75.0).epsilon(1e-15));
  CHECK_THROWS_AS(classical_gap_from_increments(CompactSequence({1.0, -0.5})), std::invalid_argument);
  CHECK_THROWS_AS(classical_gap_direct(CompactSequence({-1.0})), std::invalid_argument);

  for (std::uint64_t s = 0; s < 300; ++s) {
    const CompactSequence a = random_nonnegative_sequence(derive_seed(37, s), 500, 1.0);
    const double lhs = classical_gap_from_increments(a);
    const double rhs = classical_gap_direct(a);
    CHECK(lhs >= 0.0);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  }
}

TEST_CASE("ground-state residual") {
  const WeightFunction sqrt_u = ground_state_weight();
  const WeightFunction w = improved_weight();
  CHECK(ground_state_residual(sqrt_u, w, 1) <= 1e-15);
  CHECK(ground_state_residual(sqrt_u, w, 100000) <= 1e-12);
  const double classical = ground_state_residual(sqrt_u, classical_weight(), 10);
  CHECK(classical > 0.0);
  // Largest at n = 1, where w - w_H = 2 - sqrt(2) - 1/4.
  CHECK(classical == doctest::Approx(2.0 - std::numbers::sqrt2 - 0.25).epsilon(1e-14));
  CHECK_THROWS_AS(ground_state_residual(sqrt_u, w, 0), std::invalid_argument);
}

TEST_CASE("random test sequences") {
  const CompactSequence one = random_test_sequence(5, 1, 1.0);
  CHECK(one.support_bound() == 1);
  CHECK(std::abs(one(1)) <= 1.0);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const CompactSequence a = random_test_sequence(s, 1000, 1.0);
    const CompactSequence b = random_test_sequence(s, 1000, 1.0);
    CHECK(a == b);
    CHECK(a.support_bound() >= 1);
    CHECK(a.support_bound() <= 1000);
    for (double v : a.values()) CHECK(std::abs(v) <= 1.0);
    const CompactSequence nonneg = random_nonnegative_sequence(s, 50, 2.0);
    for (double v : nonneg.values()) CHECK((v >= 0.0 && v <= 2.0));
  }
  CHECK(random_test_sequence(1, 1000, 1.0) != random_test_sequence(2, 1000, 1.0));
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}

TEST_CASE("eigen scan") {
  const auto rows = eigen_scan({100, 1, 10}, improved_weight(), 1e-12);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].size == 1);
  CHECK(rows[2].size == 100);
  CHECK(std::abs(rows[0].lambda_min - (2.0 + std::numbers::sqrt2)) <= 1e-11);
  for (const auto& r : rows) {
    CHECK(r.monotone);
    CHECK_FALSE(r.below_one);
  }
  CHECK_THROWS_AS(eigen_scan({}, improved_weight(), 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(eigen_scan({0}, improved_weight(), 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(eigen_scan({1}, improved_weight(), 0.0), std::invalid_argument);
}

TEST_CASE("configuration validation") {
  VerificationConfig config;
  CHECK_NOTHROW(config.validate());
  config.gap_trials = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(config), std::invalid_argument);
  config = VerificationConfig{};
  config.eigen_sizes = {};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = VerificationConfig{};
  config.gap_tol = 0.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = VerificationConfig{};
  config.precision_digits = 10;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("verification passes and is deterministic across thread counts") {
  VerificationConfig config = small_config();
  config.threads = 1;
  const VerificationReport a = run_verification(config);
  config.threads = 4;
  const VerificationReport b = run_verification(config);
  CHECK(a.passed());
  for (const auto& c : a.checks) {
    CAPTURE(c.name);
    if (!c.informational) CHECK(c.passed);
  }
  check_identical(a, b);

  config.seed = 43;
  const VerificationReport c = run_verification(config);
  CHECK(c.min_relative_gap != a.min_relative_gap);
}

TEST_CASE("extended-precision cross-check is reported when requested") {
  VerificationConfig config = small_config();
  config.precision_digits = 40;
  const VerificationReport report = run_verification(config);
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.name == "closed_form_extended_agreement"; });
  REQUIRE(it != report.checks.end());
  CHECK(it->passed);
}

TEST_CASE("a failing tolerance surfaces as a failed check") {
  VerificationConfig config = small_config();
  config.residual_tol = 1e-30;
  const VerificationReport report = run_verification(config);
  CHECK_FALSE(report.passed());
}
