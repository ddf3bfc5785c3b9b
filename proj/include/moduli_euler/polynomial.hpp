#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "moduli_euler/rational.hpp"

namespace moduli_euler {

/// Dense univariate polynomial with exact coefficients. coefficients()[i]
/// multiplies x^i; trailing zeros are always trimmed, so the zero polynomial
/// has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coefficients);
  explicit Polynomial(std::vector<Rational> coefficients);
  explicit Polynomial(const Rational& constant);

  static Polynomial monomial(const Rational& coefficient, std::size_t degree);
  /// 1 - a·x
  static Polynomial one_minus(const Rational& a);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t power) const;

  Rational evaluate(const Rational& x) const;
  /// p(c·x)
  Polynomial scale_argument(const Rational& c) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(char variable = 'x') const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Schoolbook long division. Throws std::domain_error on a zero divisor.
PolynomialDivision divide(const Polynomial& dividend, const Polynomial& divisor);

Polynomial pow(const Polynomial& base, unsigned exponent);

}  // namespace moduli_euler
