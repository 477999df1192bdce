#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "hardy/extended_real.hpp"

namespace hardy {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const;
  BigInt denominator() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Correctly rounded to the nearest double.
  double to_double() const;
  ExtendedReal to_extended(Precision p) const;

  ExactRational& operator+=(const ExactRational& rhs) { value_ += rhs.value_; return *this; }
  ExactRational& operator-=(const ExactRational& rhs) { value_ -= rhs.value_; return *this; }
  ExactRational& operator*=(const ExactRational& rhs) { value_ *= rhs.value_; return *this; }
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const { ExactRational out; out.value_ = -value_; return out; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  friend ExactRational abs(const ExactRational& x) { return x < ExactRational(0) ? -x : x; }
  friend std::ostream& operator<<(std::ostream& os, const ExactRational& x) { return os << x.to_string(); }

 private:
  boost::multiprecision::cpp_rational value_;
};

}  // namespace hardy
