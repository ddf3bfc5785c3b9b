#include "moduli_euler/bernoulli.hpp"

#include <string>

#include "moduli_euler/errors.hpp"

namespace moduli_euler {

BernoulliTable::BernoulliTable() : values_{Rational(1)} {}

Rational BernoulliTable::operator()(unsigned n) {
  std::lock_guard lock(mutex_);
  extend_to(n);
  return values_[n];
}

std::size_t BernoulliTable::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

void BernoulliTable::extend_to(unsigned n) {
  values_.reserve(n + 1);
  for (unsigned m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      values_.emplace_back();
      continue;
    }
    Rational acc;
    for (unsigned k = 0; k < m; ++k) {
      if (!values_[k].is_zero()) {
        acc += Rational(binomial(m + 1, k)) * values_[k];
      }
    }
    values_.push_back(-acc / Rational(m + 1));
  }
}

Rational bernoulli_number(unsigned n) {
  static BernoulliTable table;
  return table(n);
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
  // Horner in x over the descending powers x^(n-k).
  Rational acc;
  for (unsigned k = 0; k <= n; ++k) {
    acc = acc * x + Rational(binomial(n, k)) * bernoulli_number(k);
  }
  return acc;
}

PowerSumPolynomial::PowerSumPolynomial(unsigned exponent) : exponent_(exponent) {
  std::vector<Rational> c(exponent + 2);
  const Rational scale = Rational(1) / Rational(exponent + 1);
  for (unsigned r = 1; r <= exponent + 1; ++r) {
    const unsigned b = exponent + 1 - r;
    c[r] = scale * Rational(binomial(exponent + 1, r)) * bernoulli_number(b) * Rational(sign_power(b));
  }
  polynomial_ = Polynomial(std::move(c));
}

PowerSumPolynomial power_sum_polynomial(unsigned k) { return PowerSumPolynomial(k); }

unsigned weighted_sum_upper_index(unsigned q) {
  if (q <= 2) {
    return 0;
  }
  return q % 2 == 1 ? (q - 1) / 2 : (q - 2) / 2;
}

Rational weighted_bernoulli_sum(unsigned g, unsigned q) {
  if (g == 0 || g % 2 == 0) {
    throw PreconditionError("weighted Bernoulli sum needs odd g, got g=" + std::to_string(g));
  }
  if (q == 0) {
    throw PreconditionError("weighted Bernoulli sum needs q >= 1");
  }
  Rational sum;
  for (unsigned i = 1; i <= weighted_sum_upper_index(q); ++i) {
    sum += Rational(static_cast<long>(q) - 2 * static_cast<long>(i)) *
           bernoulli_polynomial(g, Rational(Integer(i), Integer(q)));
  }
  return sum;
}

}  // namespace moduli_euler
