#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hodgewitt/rational.hpp"

using hodgewitt::Int;
using hodgewitt::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1) - Rational(1, 3) == Rational(2, 3));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  // repeated tiny increments stay exact, no drift
  Rational tenth(1, 10);
  Rational sum(0);
  for (int k = 0; k < 10; ++k) sum += tenth;
  CHECK(sum == Rational(1));
}

TEST_CASE("ordering crosses denominators and signs") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
}

TEST_CASE("floor rounds toward negative infinity") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK(Rational(3).floor() == 3);
  CHECK(Rational(-3).floor() == -3);
}

TEST_CASE("predicates") {
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-1, 5).is_negative());
  CHECK_FALSE(Rational(1, 5).is_negative());
}

TEST_CASE("parse accepts a and a/b with the sign on the numerator") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("0") == Rational(0));

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);
}

TEST_CASE("str omits the denominator exactly when it is 1") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(4, 6).str() == "2/3");
}

TEST_CASE("parse then print then parse is the identity on random reduced fractions") {
  std::mt19937_64 rng(20260817);
  std::uniform_int_distribution<long long> nums(-1000, 1000);
  std::uniform_int_distribution<long long> dens(1, 1000);
  for (int k = 0; k < 500; ++k) {
    Rational r(nums(rng), dens(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("values grow past 64 bits without losing exactness") {
  Rational big(Int(1) << 100, Int(3));
  Rational reconstructed = big * Rational(3) / Rational(Int(1) << 100);
  CHECK(reconstructed == Rational(1));
  CHECK(Rational::parse(big.str()) == big);
}
