#include "hardy/weight_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hardy {

WeightFunction::WeightFunction(Evaluator value, ExtendedEvaluator extended, std::string name)
    : value_(std::move(value)), extended_(std::move(extended)), name_(std::move(name)) {
  if (!value_) throw std::invalid_argument("weight function needs an evaluator");
}

double WeightFunction::operator()(Index n) const {
  if (n == 0) return 0.0;
  double v = value_(n);
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::domain_error("weight " + (name_.empty() ? std::string("u") : name_) + " is not strictly positive at n=" +
                            std::to_string(n));
  }
  return v;
}

ExtendedReal WeightFunction::extended(Index n, Precision p) const {
  if (n == 0) return ExtendedReal(p);
  if (!extended_) return ExtendedReal((*this)(n), p);
  ExtendedReal v = extended_(n, p);
  if (!(v > ExtendedReal(p))) throw std::domain_error("extended weight is not strictly positive at n=" + std::to_string(n));
  return v;
}

WeightFunction WeightFunction::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("weight scale must be positive");
  ExtendedEvaluator ext;
  if (extended_) {
    ext = [inner = extended_, c](Index n, Precision p) { return inner(n, p) * ExtendedReal(c, p); };
  }
  return WeightFunction([inner = value_, c](Index n) { return c * inner(n); }, std::move(ext), name_ + "*c");
}

WeightFunction WeightFunction::squared() const {
  ExtendedEvaluator ext;
  if (extended_) {
    ext = [inner = extended_](Index n, Precision p) {
      ExtendedReal v = inner(n, p);
      return v * v;
    };
  }
  return WeightFunction(
      [inner = value_](Index n) {
        double v = inner(n);
        return v * v;
      },
      std::move(ext), name_ + "^2");
}

}  // namespace hardy
