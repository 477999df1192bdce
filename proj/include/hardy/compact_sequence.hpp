#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardy/weight_function.hpp"

namespace hardy {

/// Finitely supported function phi on N, stored densely over 1..N.
///
/// phi(0) = 0 (Dirichlet boundary) and phi(n) = 0 for n > N. The support
/// bound N is the stored length; trailing zeros are allowed.
template <class Real>
class BasicSequence {
 public:
  BasicSequence() = default;
  /// values[i] is phi(i + 1).
  explicit BasicSequence(std::vector<Real> values) : values_(std::move(values)) {}

  static BasicSequence zeros(Index support_bound) { return BasicSequence(std::vector<Real>(support_bound, Real(0))); }

  static BasicSequence delta(Index at) {
    if (at == 0) throw std::invalid_argument("delta at the boundary vertex 0 is identically zero on N");
    auto out = zeros(at);
    out.values_[at - 1] = Real(1);
    return out;
  }

  template <class F>
  static BasicSequence tabulate(Index support_bound, F&& f) {
    std::vector<Real> values;
    values.reserve(support_bound);
    for (Index n = 1; n <= support_bound; ++n) values.push_back(f(n));
    return BasicSequence(std::move(values));
  }

  Index support_bound() const { return values_.size(); }

  Real operator()(Index n) const {
    if (n == 0 || n > values_.size()) return Real(0);
    return values_[n - 1];
  }

  /// Mutable access to phi(n), 1 <= n <= N.
  Real& at(Index n) {
    if (n == 0 || n > values_.size()) throw std::out_of_range("sequence index outside 1..N");
    return values_[n - 1];
  }

  std::span<const Real> values() const { return values_; }

  friend bool operator==(const BasicSequence&, const BasicSequence&) = default;

 private:
  std::vector<Real> values_;
};

using CompactSequence = BasicSequence<double>;

}  // namespace hardy
