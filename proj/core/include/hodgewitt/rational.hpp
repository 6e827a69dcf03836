#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hodgewitt {

/// Arbitrary-precision integer used throughout the library. Slope
/// denominators are small, but multiplicities and cumulative sums in
/// product constructions are unbounded, so fixed-width integers are out.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive
/// denominator. All arithmetic is exact; there is no floating-point
/// fallback anywhere in the library.
///
/// Text form: "a/b", or just "a" when the denominator is 1. A negative
/// value carries its sign on the numerator only.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by design
  Rational(long long value) : num_(value), den_(1) {}       // NOLINT
  Rational(int value) : num_(value), den_(1) {}             // NOLINT
  Rational(Int numerator, Int denominator);
  Rational(long long numerator, long long denominator)
      : Rational(Int(numerator), Int(denominator)) {}

  /// Parses the text form. Throws std::invalid_argument on anything that
  /// is not "<int>" or "<int>/<positive int>".
  static Rational parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  /// Largest integer <= this.
  Int floor() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }

  /// Exact division; throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& lhs, const Rational& rhs);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Int num_;
  Int den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace hodgewitt
