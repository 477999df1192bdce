#include "hardy/exact_rational.hpp"

#include <gmp.h>

#include <stdexcept>

namespace hardy {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

BigInt ExactRational::numerator() const { return boost::multiprecision::numerator(value_); }

BigInt ExactRational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string ExactRational::to_string() const {
  BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

namespace {

// Single correctly rounded conversion through GMP's exact rational type.
void assign_rational(mpfr_ptr out, const ExactRational& x) {
  mpq_t q;
  mpq_init(q);
  mpq_set_str(q, x.to_string().c_str(), 10);
  mpfr_set_q(out, q, MPFR_RNDN);
  mpq_clear(q);
}

}  // namespace

double ExactRational::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  assign_rational(tmp, *this);
  double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

ExtendedReal ExactRational::to_extended(Precision p) const {
  ExtendedReal out(p);
  assign_rational(out.raw(), *this);
  return out;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace hardy
