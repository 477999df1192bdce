#include "hardy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hardy {

TruncatedOperatorPair::TruncatedOperatorPair(std::vector<double> weight_diagonal) : weights_(std::move(weight_diagonal)) {
  if (weights_.empty()) throw std::invalid_argument("truncation size N must be >= 1");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw std::invalid_argument("weight diagonal entry " + std::to_string(i + 1) + " is not strictly positive");
    }
  }
}

TruncatedOperatorPair TruncatedOperatorPair::from_weight(Index N, const WeightFunction& w) {
  std::vector<double> diagonal;
  diagonal.reserve(N);
  for (Index n = 1; n <= N; ++n) diagonal.push_back(w(n));
  return TruncatedOperatorPair(std::move(diagonal));
}

SymmetricTridiagonal TruncatedOperatorPair::symmetrized() const {
  SymmetricTridiagonal out;
  const std::size_t N = weights_.size();
  out.diagonal.resize(N);
  out.off_diagonal.resize(N - 1);
  for (std::size_t i = 0; i < N; ++i) out.diagonal[i] = kStiffnessDiagonal / weights_[i];
  for (std::size_t i = 0; i + 1 < N; ++i) {
    out.off_diagonal[i] = kStiffnessOffDiagonal / std::sqrt(weights_[i] * weights_[i + 1]);
  }
  return out;
}

Index count_eigenvalues_below(const SymmetricTridiagonal& matrix, double x) {
  constexpr double kTiny = std::numeric_limits<double>::min();
  Index negatives = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < matrix.diagonal.size(); ++i) {
    double next = matrix.diagonal[i] - x;
    if (i > 0) {
      const double e = matrix.off_diagonal[i - 1];
      next -= e * e / pivot;
    }
    if (next == 0.0) next = -kTiny;
    if (next < 0.0) ++negatives;
    pivot = next;
  }
  return negatives;
}

double gershgorin_upper_bound(const SymmetricTridiagonal& matrix) {
  double bound = -std::numeric_limits<double>::infinity();
  const std::size_t N = matrix.diagonal.size();
  for (std::size_t i = 0; i < N; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(matrix.off_diagonal[i - 1]);
    if (i + 1 < N) radius += std::abs(matrix.off_diagonal[i]);
    bound = std::max(bound, matrix.diagonal[i] + radius);
  }
  return bound;
}

double min_generalized_eigenvalue(const TruncatedOperatorPair& pair, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvalue tolerance must be positive");
  const SymmetricTridiagonal matrix = pair.symmetrized();
  // B is positive definite, so [0, Gershgorin] brackets the whole spectrum.
  double lo = 0.0;
  double hi = gershgorin_upper_bound(matrix);
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (count_eigenvalues_below(matrix, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace hardy
