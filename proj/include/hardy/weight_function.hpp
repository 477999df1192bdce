#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "hardy/extended_real.hpp"

namespace hardy {

/// Vertex index on the half-line graph N_0 = {0, 1, 2, ...}; 0 is the
/// boundary vertex.
using Index = std::size_t;

/// An arbitrary real function on N (a potential). Unlike WeightFunction no
/// sign is imposed, e.g. (Δu)/u for a general positive u.
template <class Real>
using SiteFunction = std::function<Real(Index)>;

using Potential = SiteFunction<double>;

/// Strictly positive function on N with the boundary convention u(0) = 0.
///
/// Evaluation at n >= 1 throws std::domain_error if the underlying evaluator
/// yields a value that is not strictly positive and finite. An optional
/// extended-precision evaluator can be attached; operations that difference
/// neighbouring values (stencils of slowly varying weights) use it to avoid
/// cancellation.
class WeightFunction {
 public:
  using Evaluator = std::function<double(Index)>;
  using ExtendedEvaluator = std::function<ExtendedReal(Index, Precision)>;

  explicit WeightFunction(Evaluator value, ExtendedEvaluator extended = {}, std::string name = {});

  double operator()(Index n) const;

  bool has_extended() const { return static_cast<bool>(extended_); }
  /// Extended-precision value; falls back to the exact lift of the double
  /// value when no extended evaluator is attached.
  ExtendedReal extended(Index n, Precision p) const;

  const std::string& name() const { return name_; }

  /// n -> c * u(n), c > 0.
  WeightFunction scaled(double c) const;
  /// n -> u(n)^2, the measure of l^2(N, u^2).
  WeightFunction squared() const;

 private:
  Evaluator value_;
  ExtendedEvaluator extended_;
  std::string name_;
};

}  // namespace hardy
