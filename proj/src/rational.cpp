#include "lcmlab/rational.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>

#include "lcmlab/error.hpp"

namespace lcmlab {

Rational::Rational(const Integer& num, const Integer& den) : num_(num), den_(den) {
  if (den_ == 0) throw Error(ErrorKind::ZeroDivisor, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1 && g != 0) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::from_long_double(long double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::BadInput, "non-finite real value");
  if (value == 0.0L) return Rational();
  int exponent = 0;
  long double mantissa = std::frexp(value, &exponent);  // |mantissa| in [0.5, 1)
  const bool negative = mantissa < 0;
  if (negative) mantissa = -mantissa;
  // 64 bits covers the x87 extended significand exactly.
  const auto bits = static_cast<std::uint64_t>(std::ldexp(mantissa, 64));
  Integer num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(bits), 0, 0, &bits);
  if (negative) num = -num;
  exponent -= 64;
  Integer den = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return Rational(num, den);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::BadInput, "not a rational: '" + text + "'");
  }
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw Error(ErrorKind::ZeroDivisor, "reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::abs() const { return Rational(::abs(num_), den_, Normalized{}); }

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) return reciprocal().pow(-exponent);
  Integer n, d;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), e);
  return Rational(std::move(n), std::move(d), Normalized{});
}

long double Rational::to_long_double() const {
  // Scale so the integer quotient carries at least 64 significant bits.
  const long num_bits = static_cast<long>(mpz_sizeinbase(num_.get_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(den_.get_mpz_t(), 2));
  const long shift = 80 - (num_bits - den_bits);
  Integer scaled = num_;
  if (shift > 0) mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  Integer q;
  if (shift >= 0) {
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den_.get_mpz_t());
  } else {
    Integer d = den_;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  }
  return std::ldexp(lcmlab::to_long_double(q), static_cast<int>(-shift));
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorKind::ZeroDivisor, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const { return Rational(-num_, den_, Normalized{}); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

long double to_long_double(const Integer& value) {
  if (value == 0) return 0.0L;
  Integer magnitude = ::abs(value);
  const long bits = static_cast<long>(mpz_sizeinbase(magnitude.get_mpz_t(), 2));
  long shift = 0;
  if (bits > 64) {
    shift = bits - 64;
    mpz_tdiv_q_2exp(magnitude.get_mpz_t(), magnitude.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  }
  std::uint64_t top = 0;
  mpz_export(&top, nullptr, 1, sizeof(top), 0, 0, magnitude.get_mpz_t());
  const long double result = std::ldexp(static_cast<long double>(top), static_cast<int>(shift));
  return value < 0 ? -result : result;
}

}  // namespace lcmlab
