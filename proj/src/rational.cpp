#include "moduli_euler/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace moduli_euler {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num_text(text.substr(0, slash));
  const std::string den_text = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      i = 1;
    }
    if (i == s.size()) {
      return false;
    }
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        return false;
      }
    }
    return true;
  };
  if (!digits_ok(num_text, true) || !digits_ok(den_text, false)) {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
  const std::string num_clean = num_text[0] == '+' ? num_text.substr(1) : num_text;
  return Rational(Integer(num_clean), Integer(den_text));
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& value) {
  Rational out;
  out.value_ = -value.value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    return Rational(1) / pow(base, -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace moduli_euler
