#include "hardy/extended_real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hardy {
namespace {

constexpr double kLog2Of10 = 3.3219280948873623;

mpfr_prec_t bits_for(Precision p) {
  if (p.digits10 == 0) throw std::invalid_argument("precision must be at least one decimal digit");
  // A few guard bits beyond the decimal request.
  return static_cast<mpfr_prec_t>(std::ceil(p.digits10 * kLog2Of10)) + 8;
}

}  // namespace

ExtendedReal::ExtendedReal() : ExtendedReal(Precision{}) {}

ExtendedReal::ExtendedReal(Precision p) {
  mpfr_init2(value_, bits_for(p));
  mpfr_set_zero(value_, 1);
}

ExtendedReal::ExtendedReal(double value, Precision p) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits_for(p), 53));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

ExtendedReal::ExtendedReal(long value, Precision p) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits_for(p), 64));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

ExtendedReal::ExtendedReal(std::string_view decimal, Precision p) {
  mpfr_init2(value_, bits_for(p));
  std::string text(decimal);
  if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: " + text);
  }
}

ExtendedReal::ExtendedReal(const ExtendedReal& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ExtendedReal::ExtendedReal(ExtendedReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

ExtendedReal& ExtendedReal::operator=(const ExtendedReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

ExtendedReal& ExtendedReal::operator=(ExtendedReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

ExtendedReal::~ExtendedReal() { mpfr_clear(value_); }

unsigned ExtendedReal::digits10() const {
  return static_cast<unsigned>(std::floor((bits() - 8) / kLog2Of10));
}

double ExtendedReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

long double ExtendedReal::to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }

std::string ExtendedReal::to_string(unsigned digits) const {
  if (digits == 0) digits = 1;
  int needed = mpfr_snprintf(nullptr, 0, "%.*Re", static_cast<int>(digits - 1), value_);
  std::vector<char> buffer(static_cast<std::size_t>(needed) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", static_cast<int>(digits - 1), value_);
  return std::string(buffer.data(), static_cast<std::size_t>(needed));
}

void ExtendedReal::grow_to(mpfr_prec_t target) {
  if (target > bits()) mpfr_prec_round(value_, target, MPFR_RNDN);
}

ExtendedReal& ExtendedReal::operator+=(const ExtendedReal& rhs) {
  grow_to(rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtendedReal& ExtendedReal::operator-=(const ExtendedReal& rhs) {
  grow_to(rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtendedReal& ExtendedReal::operator*=(const ExtendedReal& rhs) {
  grow_to(rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtendedReal& ExtendedReal::operator/=(const ExtendedReal& rhs) {
  grow_to(rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtendedReal ExtendedReal::operator-() const {
  ExtendedReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ExtendedReal sqrt(const ExtendedReal& x) {
  ExtendedReal out(x);
  mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
  return out;
}

ExtendedReal abs(const ExtendedReal& x) {
  ExtendedReal out(x);
  mpfr_abs(out.value_, x.value_, MPFR_RNDN);
  return out;
}

}  // namespace hardy
