#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "moduli_euler/polynomial.hpp"
#include "moduli_euler/rational.hpp"

namespace moduli_euler {

class UnivariateSeries;

/// Truncated series in t whose coefficients are polynomials in a formal
/// variable N. Only t-degrees 1..order are stored (no constant term), no
/// stored coefficient is zero, and values are immutable once built except
/// through the arithmetic operators.
class BivariateSeries {
 public:
  /// (t_degree, N_degree)
  using Key = std::pair<unsigned, unsigned>;

  explicit BivariateSeries(unsigned order);

  unsigned order() const { return order_; }
  bool empty() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  /// Adds c·N^n_degree·t^t_degree; terms above the order are dropped.
  /// Throws std::invalid_argument for t_degree == 0.
  void add_term(unsigned t_degree, unsigned n_degree, const Rational& c);
  /// Adds weight(N)·t^t_degree.
  void add_polynomial(unsigned t_degree, const Polynomial& weight);

  /// Coefficient of N^n_degree t^t_degree; TruncationError beyond the order.
  Rational coefficient(unsigned t_degree, unsigned n_degree) const;
  /// Coefficient of t^t_degree as a polynomial in N.
  Polynomial t_coefficient(unsigned t_degree) const;

  /// Substitutes a concrete value for N.
  UnivariateSeries specialize(const Rational& n) const;

  BivariateSeries& operator+=(const BivariateSeries& rhs);
  BivariateSeries& operator-=(const BivariateSeries& rhs);
  BivariateSeries& operator*=(const Rational& scalar);

  friend BivariateSeries operator+(BivariateSeries lhs, const BivariateSeries& rhs) { return lhs += rhs; }
  friend BivariateSeries operator-(BivariateSeries lhs, const BivariateSeries& rhs) { return lhs -= rhs; }
  friend BivariateSeries operator*(BivariateSeries lhs, const Rational& rhs) { return lhs *= rhs; }
  friend BivariateSeries operator*(const BivariateSeries& lhs, const BivariateSeries& rhs);
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

  std::string to_string() const;

 private:
  unsigned order_;
  std::map<Key, Rational> terms_;
};

/// Truncated series in t with rational coefficients; same invariants as
/// BivariateSeries with the N-degree fixed at zero.
class UnivariateSeries {
 public:
  explicit UnivariateSeries(unsigned order);

  unsigned order() const { return order_; }
  bool empty() const { return terms_.empty(); }
  const std::map<unsigned, Rational>& terms() const { return terms_; }

  void add_term(unsigned t_degree, const Rational& c);
  Rational coefficient(unsigned t_degree) const;

  /// Same coefficients with a smaller order.
  UnivariateSeries truncate(unsigned order) const;

  UnivariateSeries& operator+=(const UnivariateSeries& rhs);
  UnivariateSeries& operator-=(const UnivariateSeries& rhs);
  UnivariateSeries& operator*=(const Rational& scalar);

  friend UnivariateSeries operator+(UnivariateSeries lhs, const UnivariateSeries& rhs) { return lhs += rhs; }
  friend UnivariateSeries operator-(UnivariateSeries lhs, const UnivariateSeries& rhs) { return lhs -= rhs; }
  friend UnivariateSeries operator*(UnivariateSeries lhs, const Rational& rhs) { return lhs *= rhs; }
  friend UnivariateSeries operator*(const UnivariateSeries& lhs, const UnivariateSeries& rhs);
  friend bool operator==(const UnivariateSeries&, const UnivariateSeries&) = default;

  std::string to_string() const;

 private:
  unsigned order_;
  std::map<unsigned, Rational> terms_;
};

UnivariateSeries pow(const UnivariateSeries& base, unsigned exponent);

/// weight(N) · log(1 - p·t) = -weight(N) · sum_{m=1}^{order} p^m t^m / m.
/// Throws PreconditionError for p < 1.
BivariateSeries log_one_minus(std::int64_t p, const Polynomial& weight, unsigned order);
UnivariateSeries log_one_minus(std::int64_t p, const Rational& weight, unsigned order);

/// Asymptotic t-content of N·log( sqrt(2πt) / (Γ(1/t) (e t)^(1/t)) ):
/// N · sum_{k>=1} -B_{2k} / (2k(2k-1)) · t^(2k-1).
BivariateSeries penner_prefactor_series(unsigned order);

/// Raw coefficient of N^s t^m (no s!(-1)^s normalization).
Rational extract_coefficient(const BivariateSeries& series, unsigned s, unsigned m);

}  // namespace moduli_euler
