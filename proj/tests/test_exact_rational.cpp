#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hardy/exact_rational.hpp"
#include "hardy/extended_real.hpp"

using hardy::BigInt;
using hardy::ExactRational;
using hardy::ExtendedReal;
using hardy::Precision;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  const ExactRational r(BigInt(6), BigInt(-8));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(r.to_string() == "-3/4");
  CHECK(ExactRational(BigInt(10), BigInt(5)).to_string() == "2");
  CHECK(ExactRational(0).denominator() == 1);
}

TEST_CASE("rational arithmetic is exact") {
  const ExactRational third(BigInt(1), BigInt(3));
  const ExactRational sixth(BigInt(1), BigInt(6));
  CHECK(third + sixth == ExactRational(BigInt(1), BigInt(2)));
  CHECK(third - sixth == sixth);
  CHECK(third * sixth == ExactRational(BigInt(1), BigInt(18)));
  CHECK(third / sixth == ExactRational(2));
  CHECK(-third < sixth);
  CHECK(abs(-third) == third);
  CHECK_THROWS_AS(third / ExactRational(0), std::domain_error);
  CHECK_THROWS_AS(ExactRational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("conversion to double is correctly rounded") {
  CHECK(ExactRational(BigInt(1), BigInt(3)).to_double() == 1.0 / 3.0);
  CHECK(ExactRational(BigInt(21), BigInt(512)).to_double() == 0.041015625);
  // 2^-60 + 2^-120 rounds to 2^-60.
  const BigInt two60 = BigInt(1) << 60;
  const ExactRational tiny = ExactRational(BigInt(1), two60) + ExactRational(BigInt(1), two60 * two60);
  CHECK(tiny.to_double() == std::ldexp(1.0, -60));
  // A huge numerator and denominator still convert.
  const BigInt big = BigInt(1) << 3000;
  CHECK(ExactRational(big + 1, big * 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
}

TEST_CASE("extended reals carry their own precision") {
  const ExtendedReal two(2L, Precision{60});
  const ExtendedReal root = sqrt(two);
  CHECK(root.digits10() >= 60);
  CHECK(root.to_string(40) == "1.414213562373095048801688724209698078570e+00");
  CHECK(root.to_double() == std::numbers::sqrt2);

  const ExtendedReal low(1.0, Precision{20});
  const ExtendedReal mixed = low + root;
  CHECK(mixed.bits() == root.bits());
  CHECK(mixed > root);
  CHECK(-root < ExtendedReal(Precision{20}));
  CHECK(abs(-root) == root);
}

TEST_CASE("extended reals parse decimals and reject garbage") {
  const ExtendedReal x(std::string_view("0.5857864376269049511983112757903019214303"), Precision{45});
  CHECK(x.to_double() == doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-16));
  CHECK_THROWS_AS(ExtendedReal(std::string_view("not-a-number"), Precision{20}), std::invalid_argument);
  CHECK_THROWS_AS(ExtendedReal(Precision{0}), std::invalid_argument);
}

TEST_CASE("extended reals at different precisions from concurrent threads") {
  std::vector<double> out(8);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < out.size(); ++t) {
    pool.emplace_back([&, t] {
      ExtendedReal acc(Precision{30 + 10 * t});
      for (long i = 1; i <= 1000; ++i) acc += sqrt(ExtendedReal(i, Precision{30 + 10 * t}));
      out[t] = acc.to_double();
    });
  }
  for (auto& th : pool) th.join();
  for (double v : out) CHECK(v == out.front());
}
