#include "hardy/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {
namespace {

void require_positive_index(Index n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": index must be >= 1 (0 is the boundary vertex)");
}

BigInt central_binomial(unsigned two_m) {
  // acc = C(m + i, i) after step i.
  const unsigned m = two_m / 2;
  BigInt acc = 1;
  for (unsigned i = 1; i <= m; ++i) {
    acc *= (two_m - m + i);
    acc /= i;
  }
  return acc;
}

// Coefficients c_1..c_64 rounded to long double, built once.
const std::vector<long double>& coefficient_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> out;
    for (Index k = 1; k <= 64; ++k) out.push_back(series_coefficient(k).to_extended(Precision{30}).to_long_double());
    return out;
  }();
  return table;
}

long double coefficient_ld(Index k) {
  const auto& table = coefficient_table();
  if (k <= table.size()) return table[k - 1];
  return series_coefficient(k).to_extended(Precision{30}).to_long_double();
}

}  // namespace

ExactRational classical_hardy_weight(Index n) {
  require_positive_index(n, "classical_hardy_weight");
  BigInt n_big = n;
  return ExactRational(1, 4 * n_big * n_big);
}

ExactRational series_coefficient(Index k) {
  if (k == 0) throw std::invalid_argument("series_coefficient: the series starts at k = 1");
  const unsigned four_k = static_cast<unsigned>(4 * k);
  BigInt denominator = BigInt(four_k - 1) << (four_k - 1);
  return ExactRational(central_binomial(four_k), denominator);
}

ExactRational half_binomial(Index j) {
  ExactRational acc(1);
  const ExactRational half(1, 2);
  for (Index i = 0; i < j; ++i) {
    acc *= half - ExactRational(static_cast<long>(i));
    acc /= ExactRational(static_cast<long>(i + 1));
  }
  return acc;
}

double improved_weight_closed(Index n) {
  require_positive_index(n, "improved_weight_closed");
  const long double x = 1.0L / static_cast<long double>(n);
  const long double sp = std::sqrt(1.0L + x);
  const long double sm = std::sqrt(1.0L - x);
  return static_cast<double>(2.0L * x * x / ((sp + sm) * (1.0L + sp) * (1.0L + sm)));
}

ExtendedReal improved_weight_closed(Index n, Precision precision) {
  require_positive_index(n, "improved_weight_closed");
  const ExtendedReal one(1L, precision);
  const ExtendedReal x = one / ExtendedReal(static_cast<long>(n), precision);
  const ExtendedReal sp = sqrt(one + x);
  const ExtendedReal sm = sqrt(one - x);
  return ExtendedReal(2L, precision) * x * x / ((sp + sm) * (one + sp) * (one + sm));
}

double improved_weight_series(Index n, Index K) {
  if (n < 2) throw std::invalid_argument("improved_weight_series: the series representation is stated for n >= 2");
  if (K == 0) throw std::invalid_argument("improved_weight_series: truncation order K must be >= 1");
  const long double step = 1.0L / (static_cast<long double>(n) * static_cast<long double>(n));
  long double power = 1.0L;
  long double sum = 0.0L;
  for (Index k = 1; k <= K; ++k) {
    power *= step;
    sum += coefficient_ld(k) * power;
  }
  return static_cast<double>(sum);
}

ExactRational improved_weight_series_exact(Index n, Index K) {
  if (n < 2) throw std::invalid_argument("improved_weight_series: the series representation is stated for n >= 2");
  if (K == 0) throw std::invalid_argument("improved_weight_series: truncation order K must be >= 1");
  BigInt n_big = n;
  const ExactRational step(1, n_big * n_big);
  ExactRational power(1);
  ExactRational sum(0);
  for (Index k = 1; k <= K; ++k) {
    power *= step;
    sum += series_coefficient(k) * power;
  }
  return sum;
}

double ground_state(Index n) { return std::sqrt(static_cast<double>(n)); }

ExtendedReal ground_state(Index n, Precision precision) { return sqrt(ExtendedReal(static_cast<long>(n), precision)); }

double weight_from_positive_solution(const WeightFunction& u, Index n) {
  require_positive_index(n, "weight_from_positive_solution");
  if (u.has_extended()) return weight_from_positive_solution(u, n, kStencilPrecision).to_double();
  const double center = u(n);
  return (2.0 * center - u(n - 1) - u(n + 1)) / center;
}

ExtendedReal weight_from_positive_solution(const WeightFunction& u, Index n, Precision precision) {
  require_positive_index(n, "weight_from_positive_solution");
  const ExtendedReal center = u.extended(n, precision);
  return (ExtendedReal(2L, precision) * center - u.extended(n - 1, precision) - u.extended(n + 1, precision)) / center;
}

WeightFunction ground_state_weight() {
  return WeightFunction([](Index n) { return ground_state(n); },
                        [](Index n, Precision p) { return ground_state(n, p); }, "sqrt");
}

WeightFunction improved_weight() {
  return WeightFunction([](Index n) { return improved_weight_closed(n); },
                        [](Index n, Precision p) { return improved_weight_closed(n, p); }, "improved");
}

WeightFunction classical_weight() {
  return WeightFunction(
      [](Index n) {
        const double nn = static_cast<double>(n);
        return 0.25 / (nn * nn);
      },
      [](Index n, Precision p) { return classical_hardy_weight(n).to_extended(p); }, "classical");
}

WeightFunction inflated_improved_weight(double epsilon) {
  if (!(epsilon > -1.0)) throw std::invalid_argument("inflation epsilon must exceed -1");
  return improved_weight().scaled(1.0 + epsilon);
}

Potential potential_from_positive_solution(WeightFunction u) {
  return [u = std::move(u)](Index n) { return n == 0 ? 0.0 : weight_from_positive_solution(u, n); };
}

}  // namespace hardy
