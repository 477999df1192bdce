#pragma once

// Arbitrary-precision binary floating point backed by MPFR.
//
// Every value carries its own precision; binary operations produce a result
// at the larger of the two operand precisions. There is no process-wide
// default, so independent threads can work at different precisions.

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hardy {

/// Requested working precision in significant decimal digits.
struct Precision {
  unsigned digits10 = 50;
};

class ExtendedReal {
 public:
  ExtendedReal();
  explicit ExtendedReal(Precision p);
  ExtendedReal(double value, Precision p);
  ExtendedReal(long value, Precision p);
  ExtendedReal(std::string_view decimal, Precision p);

  ExtendedReal(const ExtendedReal& other);
  ExtendedReal(ExtendedReal&& other) noexcept;
  ExtendedReal& operator=(const ExtendedReal& other);
  ExtendedReal& operator=(ExtendedReal&& other) noexcept;
  ~ExtendedReal();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  unsigned digits10() const;

  double to_double() const;
  long double to_long_double() const;
  /// Scientific notation with `digits` significant digits ("1.2345e-07").
  std::string to_string(unsigned digits) const;

  ExtendedReal& operator+=(const ExtendedReal& rhs);
  ExtendedReal& operator-=(const ExtendedReal& rhs);
  ExtendedReal& operator*=(const ExtendedReal& rhs);
  ExtendedReal& operator/=(const ExtendedReal& rhs);

  friend ExtendedReal operator+(ExtendedReal lhs, const ExtendedReal& rhs) { return lhs += rhs; }
  friend ExtendedReal operator-(ExtendedReal lhs, const ExtendedReal& rhs) { return lhs -= rhs; }
  friend ExtendedReal operator*(ExtendedReal lhs, const ExtendedReal& rhs) { return lhs *= rhs; }
  friend ExtendedReal operator/(ExtendedReal lhs, const ExtendedReal& rhs) { return lhs /= rhs; }
  ExtendedReal operator-() const;

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);
  friend std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b);

  friend ExtendedReal sqrt(const ExtendedReal& x);
  friend ExtendedReal abs(const ExtendedReal& x);

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  void grow_to(mpfr_prec_t bits);

  mpfr_t value_;
};

}  // namespace hardy
