#pragma once

#include <mutex>
#include <vector>

#include "moduli_euler/polynomial.hpp"
#include "moduli_euler/rational.hpp"

namespace moduli_euler {

/// Bernoulli numbers with B_1 = -1/2, generated from
/// sum_{k=0}^{n} C(n+1, k) B_k = 0 and extended on demand.
/// Lookups are internally synchronized.
class BernoulliTable {
 public:
  BernoulliTable();

  Rational operator()(unsigned n);
  std::size_t size() const;

 private:
  void extend_to(unsigned n);

  mutable std::mutex mutex_;
  std::vector<Rational> values_;
};

/// Process-wide cached B_n.
Rational bernoulli_number(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_polynomial(unsigned n, const Rational& x);

/// Closed form in n of 1^k + 2^k + ... + n^k (Faulhaber): a polynomial of
/// degree k+1 with zero constant term.
class PowerSumPolynomial {
 public:
  explicit PowerSumPolynomial(unsigned exponent);

  unsigned exponent() const { return exponent_; }
  const Polynomial& polynomial() const { return polynomial_; }
  Rational evaluate(const Rational& n) const { return polynomial_.evaluate(n); }

 private:
  unsigned exponent_;
  Polynomial polynomial_;
};

PowerSumPolynomial power_sum_polynomial(unsigned k);

/// Upper index of the congruence-class sum: (q-1)/2 for odd q, (q-2)/2 for
/// even q; zero when q <= 2.
unsigned weighted_sum_upper_index(unsigned q);

/// sum_{i=1}^{I(q)} (q - 2i) B_g(i/q) for odd g >= 1, q >= 1. Empty (zero)
/// for q <= 2. Throws PreconditionError for even g or q == 0.
Rational weighted_bernoulli_sum(unsigned g, unsigned q);

}  // namespace moduli_euler
