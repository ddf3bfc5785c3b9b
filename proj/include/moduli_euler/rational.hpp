#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace moduli_euler {

using Integer = mpz_class;

/// Arbitrary-precision signed rational, always stored in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral U>
  Rational(U value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(implicit)

  Rational(const Integer& value) : value_(value) {}  // NOLINT(implicit)

  /// Throws std::domain_error when `denominator` is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p", "-p", "p/q" or "-p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "<sign><num>/<den>", or "<sign><num>" when the denominator is 1.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// base^exponent; negative exponents invert (zero base then throws).
Rational pow(const Rational& base, int exponent);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// (-1)^n as a small integer.
constexpr int sign_power(unsigned n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace moduli_euler
