#include "moduli_euler/series.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "moduli_euler/bernoulli.hpp"
#include "moduli_euler/errors.hpp"

namespace moduli_euler {
namespace {

void require_same_order(unsigned a, unsigned b) {
  if (a != b) {
    throw std::invalid_argument("series truncation orders differ: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

void require_order(unsigned order) {
  if (order == 0) {
    throw PreconditionError("series truncation order must be >= 1");
  }
}

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, const Rational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms.erase(it);
    }
  }
}

}  // namespace

BivariateSeries::BivariateSeries(unsigned order) : order_(order) { require_order(order); }

void BivariateSeries::add_term(unsigned t_degree, unsigned n_degree, const Rational& c) {
  if (t_degree == 0) {
    throw std::invalid_argument("series terms constant in t are not representable");
  }
  if (t_degree > order_) {
    return;
  }
  accumulate(terms_, Key{t_degree, n_degree}, c);
}

void BivariateSeries::add_polynomial(unsigned t_degree, const Polynomial& weight) {
  const auto& c = weight.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    add_term(t_degree, static_cast<unsigned>(n), c[n]);
  }
}

Rational BivariateSeries::coefficient(unsigned t_degree, unsigned n_degree) const {
  if (t_degree > order_) {
    throw TruncationError("coefficient of t^" + std::to_string(t_degree) + " requested from a series truncated at t^" +
                          std::to_string(order_));
  }
  const auto it = terms_.find(Key{t_degree, n_degree});
  return it == terms_.end() ? Rational() : it->second;
}

Polynomial BivariateSeries::t_coefficient(unsigned t_degree) const {
  if (t_degree > order_) {
    throw TruncationError("t^" + std::to_string(t_degree) + " is beyond the truncation order");
  }
  Polynomial out;
  for (auto it = terms_.lower_bound(Key{t_degree, 0}); it != terms_.end() && it->first.first == t_degree; ++it) {
    out += Polynomial::monomial(it->second, it->first.second);
  }
  return out;
}

UnivariateSeries BivariateSeries::specialize(const Rational& n) const {
  UnivariateSeries out(order_);
  for (const auto& [key, c] : terms_) {
    out.add_term(key.first, c * pow(n, static_cast<int>(key.second)));
  }
  return out;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
  require_same_order(order_, rhs.order_);
  for (const auto& [key, c] : rhs.terms_) {
    accumulate(terms_, key, c);
  }
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
  require_same_order(order_, rhs.order_);
  for (const auto& [key, c] : rhs.terms_) {
    accumulate(terms_, key, -c);
  }
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

BivariateSeries operator*(const BivariateSeries& lhs, const BivariateSeries& rhs) {
  require_same_order(lhs.order_, rhs.order_);
  BivariateSeries out(lhs.order_);
  for (const auto& [ka, ca] : lhs.terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      if (ka.first + kb.first > out.order_) {
        break;  // rhs keys ascend in t-degree
      }
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

std::string BivariateSeries::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) {
      os << " + ";
    }
    os << "(" << c << ")";
    if (key.second > 0) {
      os << "*N" << (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    os << "*t" << (key.first > 1 ? "^" + std::to_string(key.first) : "");
    first = false;
  }
  os << " + O(t^" << order_ + 1 << ")";
  return os.str();
}

UnivariateSeries::UnivariateSeries(unsigned order) : order_(order) { require_order(order); }

void UnivariateSeries::add_term(unsigned t_degree, const Rational& c) {
  if (t_degree == 0) {
    throw std::invalid_argument("series terms constant in t are not representable");
  }
  if (t_degree > order_) {
    return;
  }
  accumulate(terms_, t_degree, c);
}

Rational UnivariateSeries::coefficient(unsigned t_degree) const {
  if (t_degree > order_) {
    throw TruncationError("coefficient of t^" + std::to_string(t_degree) + " requested from a series truncated at t^" +
                          std::to_string(order_));
  }
  const auto it = terms_.find(t_degree);
  return it == terms_.end() ? Rational() : it->second;
}

UnivariateSeries UnivariateSeries::truncate(unsigned order) const {
  UnivariateSeries out(order);
  if (order > order_) {
    throw TruncationError("cannot raise the truncation order of a series");
  }
  for (const auto& [m, c] : terms_) {
    out.add_term(m, c);
  }
  return out;
}

UnivariateSeries& UnivariateSeries::operator+=(const UnivariateSeries& rhs) {
  require_same_order(order_, rhs.order_);
  for (const auto& [m, c] : rhs.terms_) {
    accumulate(terms_, m, c);
  }
  return *this;
}

UnivariateSeries& UnivariateSeries::operator-=(const UnivariateSeries& rhs) {
  require_same_order(order_, rhs.order_);
  for (const auto& [m, c] : rhs.terms_) {
    accumulate(terms_, m, -c);
  }
  return *this;
}

UnivariateSeries& UnivariateSeries::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

UnivariateSeries operator*(const UnivariateSeries& lhs, const UnivariateSeries& rhs) {
  require_same_order(lhs.order_, rhs.order_);
  UnivariateSeries out(lhs.order_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      if (ma + mb > out.order_) {
        break;
      }
      out.add_term(ma + mb, ca * cb);
    }
  }
  return out;
}

std::string UnivariateSeries::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) {
      os << " + ";
    }
    os << "(" << c << ")*t" << (m > 1 ? "^" + std::to_string(m) : "");
    first = false;
  }
  os << " + O(t^" << order_ + 1 << ")";
  return os.str();
}

UnivariateSeries pow(const UnivariateSeries& base, unsigned exponent) {
  if (exponent == 0) {
    throw std::invalid_argument("series power 0 would produce a constant term");
  }
  UnivariateSeries out = base;
  for (unsigned i = 1; i < exponent; ++i) {
    out = out * base;
  }
  return out;
}

BivariateSeries log_one_minus(std::int64_t p, const Polynomial& weight, unsigned order) {
  if (p < 1) {
    throw PreconditionError("log(1 - p t) expansion needs p >= 1, got " + std::to_string(p));
  }
  BivariateSeries out(order);
  Rational power(1);
  for (unsigned m = 1; m <= order; ++m) {
    power *= Rational(p);
    out.add_polynomial(m, weight * (-power / Rational(m)));
  }
  return out;
}

UnivariateSeries log_one_minus(std::int64_t p, const Rational& weight, unsigned order) {
  if (p < 1) {
    throw PreconditionError("log(1 - p t) expansion needs p >= 1, got " + std::to_string(p));
  }
  UnivariateSeries out(order);
  Rational power(1);
  for (unsigned m = 1; m <= order; ++m) {
    power *= Rational(p);
    out.add_term(m, -weight * power / Rational(m));
  }
  return out;
}

BivariateSeries penner_prefactor_series(unsigned order) {
  BivariateSeries out(order);
  for (unsigned k = 1; 2 * k - 1 <= order; ++k) {
    out.add_term(2 * k - 1, 1, -bernoulli_number(2 * k) / Rational(2 * k * (2 * k - 1)));
  }
  return out;
}

Rational extract_coefficient(const BivariateSeries& series, unsigned s, unsigned m) {
  return series.coefficient(m, s);
}

}  // namespace moduli_euler
