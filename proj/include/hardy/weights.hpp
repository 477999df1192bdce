#pragma once

// Hardy weights on the half-line.
//
// The improved weight is w(n) = 2 - sqrt(1 + 1/n) - sqrt(1 - 1/n), the
// potential for which u(n) = sqrt(n) solves (Δ - w)u = 0 on N. For n >= 2 it
// has the expansion
//
//   w(n) = sum_{k>=1} C(4k, 2k) / ((4k - 1) 2^(4k-1)) * n^(-2k)
//        = 1/(4n^2) + 5/(64n^4) + 21/(512n^6) + ...
//
// and it dominates the classical weight 1/(4n^2) pointwise. The closed form
// is authoritative; the series is derived from it and checked against it.

#include "hardy/exact_rational.hpp"
#include "hardy/extended_real.hpp"
#include "hardy/weight_function.hpp"

namespace hardy {

/// 1/(4n^2), exactly. Throws std::invalid_argument for n = 0.
ExactRational classical_hardy_weight(Index n);

/// k-th series coefficient C(4k,2k) / ((4k-1) 2^(4k-1)) from exact integer
/// binomials, k >= 1.
ExactRational series_coefficient(Index k);

/// Generalized binomial coefficient C(1/2, j) = prod_{i<j} (1/2 - i) / j!.
/// series_coefficient(k) == -2 * half_binomial(2k).
ExactRational half_binomial(Index j);

/// Closed form in double precision. Evaluated in the algebraically equivalent
/// cancellation-free arrangement
///   2x^2 / ((sqrt(1+x) + sqrt(1-x)) (1 + sqrt(1+x)) (1 + sqrt(1-x))),  x = 1/n,
/// so the result carries a few ulps of relative error at every n. At n = 1
/// this is 2 - sqrt(2).
double improved_weight_closed(Index n);

/// Closed form at the requested working precision.
ExtendedReal improved_weight_closed(Index n, Precision precision);

/// Partial sum sum_{k=1..K} c_k n^(-2k), n >= 2, K >= 1. Accumulated front to
/// back so that it is nondecreasing in K.
double improved_weight_series(Index n, Index K);

/// The same partial sum in exact arithmetic.
ExactRational improved_weight_series_exact(Index n, Index K);

/// u(n) = sqrt(n); u(0) = 0.
double ground_state(Index n);
ExtendedReal ground_state(Index n, Precision precision);

/// (Δu)(n) / u(n) with the Dirichlet stencil 2u(n) - u(n-1) - u(n+1), u(0) = 0.
///
/// When u carries an extended evaluator the stencil is formed at
/// kStencilPrecision and rounded once; slowly varying u (like sqrt) would
/// otherwise lose most digits to cancellation. The result may be negative
/// for general u.
double weight_from_positive_solution(const WeightFunction& u, Index n);
ExtendedReal weight_from_positive_solution(const WeightFunction& u, Index n, Precision precision);

inline constexpr Precision kStencilPrecision{40};

// WeightFunction adapters.
WeightFunction ground_state_weight();
WeightFunction improved_weight();
WeightFunction classical_weight();
/// (1 + epsilon) * w for the improved w; epsilon > -1.
WeightFunction inflated_improved_weight(double epsilon);
/// n -> (Δu)(n)/u(n) as a potential.
Potential potential_from_positive_solution(WeightFunction u);

}  // namespace hardy
