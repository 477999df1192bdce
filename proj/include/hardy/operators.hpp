#pragma once

// Operators and quadratic forms on the half-line graph N_0, where n ~ m iff
// |n - m| = 1.
//
// Boundary conventions:
//  * phi(0) = 0 for every sequence.
//  * The unweighted Dirichlet Laplacian Δ keeps the edge (0, 1) with weight
//    one, so Δphi(1) = 2phi(1) - phi(2).
//  * Weights satisfy u(0) = 0, so in Δ_u and h_u the edge (0, 1) carries
//    u(1)u(0) = 0 and drops out.
//
// Everything is explicit summation over the support, templated on the scalar
// so the same code runs in double and in exact rational arithmetic.
// A weight is any callable Index -> Real; index 0 is never passed to it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "hardy/compact_sequence.hpp"
#include "hardy/weight_function.hpp"

namespace hardy {
namespace detail {

template <class Real, class Weight>
Real weight_at(const Weight& u, Index n) {
  if (n == 0) return Real(0);
  return static_cast<Real>(u(n));
}

template <class Real>
Real abs_value(const Real& x) {
  using std::abs;
  return abs(x);
}

}  // namespace detail

/// (Δphi)(n) = 2phi(n) - phi(n-1) - phi(n+1); support bound N + 1.
template <class Real>
BasicSequence<Real> apply_dirichlet_laplacian(const BasicSequence<Real>& phi) {
  const Index N = phi.support_bound();
  if (N == 0) return {};
  return BasicSequence<Real>::tabulate(N + 1, [&](Index n) {
    return Real(2) * phi(n) - phi(n - 1) - phi(n + 1);
  });
}

/// (Δ_u phi)(n) = u(n)^-2 sum_{m~n} u(n)u(m)(phi(n) - phi(m)); support bound N + 1.
template <class Real, class Weight>
BasicSequence<Real> apply_weighted_laplacian(const Weight& u, const BasicSequence<Real>& phi) {
  const Index N = phi.support_bound();
  if (N == 0) return {};
  return BasicSequence<Real>::tabulate(N + 1, [&](Index n) {
    const Real un = detail::weight_at<Real>(u, n);
    Real sum = un * detail::weight_at<Real>(u, n - 1) * (phi(n) - phi(n - 1));
    sum += un * detail::weight_at<Real>(u, n + 1) * (phi(n) - phi(n + 1));
    return sum / (un * un);
  });
}

/// sum_{n=1}^{N+1} (phi(n) - phi(n-1))^2, the left side of the Hardy inequality.
template <class Real>
Real energy(const BasicSequence<Real>& phi) {
  Real sum(0);
  for (Index n = 1; n <= phi.support_bound() + 1; ++n) {
    const Real d = phi(n) - phi(n - 1);
    sum += d * d;
  }
  return sum;
}

/// h_u(phi) = 1/2 sum_{n in N} sum_{m~n, m in N_0} u(n)u(m)(phi(n) - phi(m))^2.
template <class Real, class Weight>
Real weighted_form(const Weight& u, const BasicSequence<Real>& phi) {
  Real sum(0);
  for (Index n = 1; n <= phi.support_bound() + 1; ++n) {
    const Real un = detail::weight_at<Real>(u, n);
    for (Index m : {n - 1, n + 1}) {
      const Real d = phi(n) - phi(m);
      sum += un * detail::weight_at<Real>(u, m) * d * d;
    }
  }
  return sum / Real(2);
}

/// <f, g>_u = sum_{n>=1} f(n) g(n) u(n).
template <class Real, class Weight>
Real weighted_inner(const BasicSequence<Real>& f, const BasicSequence<Real>& g, const Weight& u) {
  const Index N = std::min(f.support_bound(), g.support_bound());
  Real sum(0);
  for (Index n = 1; n <= N; ++n) sum += f(n) * g(n) * detail::weight_at<Real>(u, n);
  return sum;
}

/// Unweighted l^2(N) inner product.
template <class Real>
Real inner(const BasicSequence<Real>& f, const BasicSequence<Real>& g) {
  return weighted_inner(f, g, [](Index) { return Real(1); });
}

/// l^2(N, u) viewed as a space: the weight is the measure.
template <class Weight>
class WeightedInnerProductSpace {
 public:
  explicit WeightedInnerProductSpace(Weight measure) : measure_(std::move(measure)) {}

  template <class Real>
  Real inner(const BasicSequence<Real>& f, const BasicSequence<Real>& g) const {
    return weighted_inner(f, g, measure_);
  }

  template <class Real>
  Real norm_squared(const BasicSequence<Real>& f) const {
    return weighted_inner(f, f, measure_);
  }

  const Weight& measure() const { return measure_; }

 private:
  Weight measure_;
};

/// (T_u phi)(n) = u(n) phi(n), unitary from l^2(N, u^2) onto l^2(N).
template <class Real, class Weight>
BasicSequence<Real> multiply_by_weight(const Weight& u, const BasicSequence<Real>& phi) {
  return BasicSequence<Real>::tabulate(phi.support_bound(),
                                       [&](Index n) { return detail::weight_at<Real>(u, n) * phi(n); });
}

/// T_u^{-1} (Δ - w) T_u phi, evaluated on 1..N+1.
template <class Real, class Weight, class Pot>
BasicSequence<Real> conjugated_schrodinger(const Weight& u, const Pot& w, const BasicSequence<Real>& phi) {
  const Index N = phi.support_bound();
  if (N == 0) return {};
  const BasicSequence<Real> lifted = multiply_by_weight(u, phi);
  const BasicSequence<Real> laplacian = apply_dirichlet_laplacian(lifted);
  return BasicSequence<Real>::tabulate(N + 1, [&](Index n) {
    const Real schrodinger = laplacian(n) - static_cast<Real>(w(n)) * lifted(n);
    return schrodinger / detail::weight_at<Real>(u, n);
  });
}

/// max_{1<=n<=N+1} |[T_u^{-1}(Δ - w)T_u phi](n) - [Δ_u phi](n)|. Vanishes up to
/// rounding whenever (Δ - w)u = 0 on N.
template <class Real, class Weight, class Pot>
Real gst_defect(const Weight& u, const Pot& w, const BasicSequence<Real>& phi) {
  const BasicSequence<Real> conjugated = conjugated_schrodinger(u, w, phi);
  const BasicSequence<Real> weighted = apply_weighted_laplacian(u, phi);
  Real worst(0);
  for (Index n = 1; n <= conjugated.support_bound(); ++n) {
    const Real d = detail::abs_value(Real(conjugated(n) - weighted(n)));
    if (d > worst) worst = d;
  }
  return worst;
}

/// |‖T_u phi‖^2 - ‖phi‖^2_{u^2}|. The two norms are summed in opposite order.
template <class Real, class Weight>
Real unitarity_defect(const Weight& u, const BasicSequence<Real>& phi) {
  const BasicSequence<Real> lifted = multiply_by_weight(u, phi);
  Real image_norm(0);
  for (Index n = 1; n <= lifted.support_bound(); ++n) image_norm += lifted(n) * lifted(n);
  Real source_norm(0);
  for (Index n = phi.support_bound(); n >= 1; --n) {
    const Real un = detail::weight_at<Real>(u, n);
    source_norm += phi(n) * phi(n) * (un * un);
  }
  return detail::abs_value(Real(image_norm - source_norm));
}

}  // namespace hardy
