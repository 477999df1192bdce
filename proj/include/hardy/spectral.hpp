#pragma once

// Finite sections of <(Δ - w)phi, phi> >= 0.
//
// On sequences supported in 1..N (Dirichlet at 0 and N + 1) the energy is
// phi^T A phi with A = tridiag(-1, 2, -1), and sum w phi^2 = phi^T W phi with
// W = diag(w(1), ..., w(N)). The best constant for the section is the
// smallest eigenvalue of the pencil A phi = lambda W phi, which equals the
// smallest eigenvalue of the symmetric tridiagonal B = W^-1/2 A W^-1/2.

#include <cstddef>
#include <span>
#include <vector>

#include "hardy/weight_function.hpp"

namespace hardy {

struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size N - 1
};

class TruncatedOperatorPair {
 public:
  /// Takes w(1..N); throws std::invalid_argument on an empty or non-positive diagonal.
  explicit TruncatedOperatorPair(std::vector<double> weight_diagonal);

  static TruncatedOperatorPair from_weight(Index N, const WeightFunction& w);

  Index size() const { return weights_.size(); }
  std::span<const double> weight_diagonal() const { return weights_; }

  static constexpr double kStiffnessDiagonal = 2.0;
  static constexpr double kStiffnessOffDiagonal = -1.0;

  /// B = W^-1/2 A W^-1/2.
  SymmetricTridiagonal symmetrized() const;

 private:
  std::vector<double> weights_;
};

/// Number of eigenvalues of `matrix` strictly below x, from the signs of the
/// LDL^T pivots of matrix - x I. An exactly zero pivot is nudged to a tiny
/// negative value, so x itself counts as "below" on a tie.
Index count_eigenvalues_below(const SymmetricTridiagonal& matrix, double x);

/// Upper end of the union of Gershgorin discs.
double gershgorin_upper_bound(const SymmetricTridiagonal& matrix);

/// Smallest eigenvalue of the pencil by Sturm bisection on [0, Gershgorin
/// bound] until the bracket is no wider than tol (or cannot shrink further).
/// Returns the bracket midpoint.
double min_generalized_eigenvalue(const TruncatedOperatorPair& pair, double tol);

}  // namespace hardy
