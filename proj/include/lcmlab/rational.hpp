#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace lcmlab {

using Integer = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator, so two
/// equal values always have identical (num, den) pairs.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(long value) : num_(value), den_(1) {}            // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den);

  /// Exact value of a finite binary float (every such float is a dyadic rational).
  static Rational from_long_double(long double value);
  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return sgn(num_); }

  Rational reciprocal() const;
  Rational abs() const;
  /// Negative exponents are allowed; 0^0 is 1.
  Rational pow(long exponent) const;

  /// Nearest-ish long double; used only for display and real-valued bounds.
  long double to_long_double() const;
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Normalized {};
  Rational(Integer num, Integer den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Truncating conversion that keeps the top 64 significant bits.
long double to_long_double(const Integer& value);

}  // namespace lcmlab
