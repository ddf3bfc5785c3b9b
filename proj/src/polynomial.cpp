#include "moduli_euler/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace moduli_euler {

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coefficients_(coefficients) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(const Rational& constant) : coefficients_{constant} { trim(); }

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::one_minus(const Rational& a) { return Polynomial{Rational(1), -a}; }

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
  std::vector<Rational> out(coefficients_.size());
  Rational factor(1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    out[i] = coefficients_[i] * factor;
    factor *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] += rhs.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] -= rhs.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> out(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) {
    c *= scalar;
  }
  trim();
  return *this;
}

std::string Polynomial::to_string(char variable) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rational& c = coefficients_[i];
    if (c.is_zero()) {
      continue;
    }
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
    } else if (c.sign() < 0) {
      os << "-";
    }
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (i == 0 || magnitude != Rational(1)) {
      os << magnitude;
      if (i > 0) {
        os << "*";
      }
    }
    if (i > 0) {
      os << variable;
      if (i > 1) {
        os << "^" << i;
      }
    }
    first = false;
  }
  return os.str();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) {
    coefficients_.pop_back();
  }
}

PolynomialDivision divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  std::vector<Rational> remainder = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  if (remainder.size() < d.size()) {
    return {Polynomial(), dividend};
  }
  std::vector<Rational> quotient(remainder.size() - dd);
  const Rational lead = d.back();
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const Rational factor = remainder[k + dd] / lead;
    quotient[k] = factor;
    if (factor.is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j <= dd; ++j) {
      remainder[k + j] -= factor * d[j];
    }
  }
  remainder.resize(dd);
  return {Polynomial(std::move(quotient)), Polynomial(std::move(remainder))};
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial out{Rational(1)};
  for (unsigned i = 0; i < exponent; ++i) {
    out *= base;
  }
  return out;
}

}  // namespace moduli_euler
