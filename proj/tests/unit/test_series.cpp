#include <doctest.h>

#include <random>

#include "moduli_euler/errors.hpp"
#include "moduli_euler/series.hpp"

using namespace moduli_euler;

namespace {

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

BivariateSeries random_series(std::mt19937& rng, unsigned order) {
  std::uniform_int_distribution<int> t_deg(1, static_cast<int>(order));
  std::uniform_int_distribution<int> n_deg(0, 3);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  std::uniform_int_distribution<int> count(0, 5);
  BivariateSeries s(order);
  for (int i = count(rng); i > 0; --i) {
    s.add_term(t_deg(rng), n_deg(rng), frac(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("series arithmetic examples") {
  BivariateSeries t(3);
  t.add_term(1, 0, 1);
  BivariateSeries minus_t(3);
  minus_t.add_term(1, 0, -1);
  CHECK((t + minus_t).empty());

  BivariateSeries n_t(1);
  n_t.add_term(1, 1, 1);
  BivariateSeries t1(1);
  t1.add_term(1, 0, 1);
  CHECK((n_t * t1).empty());

  BivariateSeries a(3);
  a.add_term(1, 0, 1);
  a.add_term(2, 0, 1);
  BivariateSeries expected(3);
  expected.add_term(2, 0, 1);
  expected.add_term(3, 0, 1);
  CHECK(a * t == expected);
}

TEST_CASE("series invariants are enforced") {
  BivariateSeries s(2);
  CHECK_THROWS_AS(s.add_term(0, 1, 1), std::invalid_argument);
  s.add_term(3, 0, 5);  // beyond the order: dropped
  CHECK(s.empty());
  s.add_term(1, 2, 0);
  CHECK(s.empty());
  CHECK_THROWS_AS(BivariateSeries(0), PreconditionError);
  CHECK_THROWS_AS(BivariateSeries(2) + BivariateSeries(3), std::invalid_argument);
  CHECK_THROWS_AS(UnivariateSeries(2) * UnivariateSeries(3), std::invalid_argument);
}

TEST_CASE("log(1 - p t) expansions") {
  const Polynomial one{Rational(1)};
  const BivariateSeries a = log_one_minus(1, one, 2);
  CHECK(a.coefficient(1, 0) == -1);
  CHECK(a.coefficient(2, 0) == frac(-1, 2));
  CHECK(a.terms().size() == 2);

  const BivariateSeries b = log_one_minus(2, Polynomial{Rational(0), Rational(1)}, 1);
  CHECK(b.coefficient(1, 1) == -2);
  CHECK(b.terms().size() == 1);

  const BivariateSeries c = log_one_minus(3, one, 3);
  CHECK(c.coefficient(1, 0) == -3);
  CHECK(c.coefficient(2, 0) == frac(-9, 2));
  CHECK(c.coefficient(3, 0) == -9);

  CHECK_THROWS_AS(log_one_minus(0, one, 3), PreconditionError);
  CHECK_THROWS_AS(log_one_minus(-2, Rational(1), 3), PreconditionError);
}

TEST_CASE("Penner prefactor series") {
  const BivariateSeries one = penner_prefactor_series(1);
  CHECK(one.coefficient(1, 1) == frac(-1, 12));
  CHECK(one.terms().size() == 1);

  const BivariateSeries three = penner_prefactor_series(3);
  CHECK(three.coefficient(1, 1) == frac(-1, 12));
  CHECK(three.coefficient(3, 1) == frac(1, 360));
  CHECK(three.terms().size() == 2);

  const BivariateSeries wide = penner_prefactor_series(15);
  for (const auto& [key, c] : wide.terms()) {
    CHECK(key.first % 2 == 1);
    CHECK(key.second == 1);
  }
  for (unsigned k = 1; 2 * k - 1 <= 15; ++k) {
    // -B_{2k} alternates: negative for k odd, positive for k even.
    CHECK(wide.coefficient(2 * k - 1, 1).sign() == (k % 2 == 1 ? -1 : 1));
    if (2 * k <= 15) {
      CHECK(wide.coefficient(2 * k, 1).is_zero());
    }
  }
}

TEST_CASE("coefficient extraction") {
  const BivariateSeries s = penner_prefactor_series(1);
  CHECK(extract_coefficient(s, 1, 1) == frac(-1, 12));
  CHECK(extract_coefficient(s, 4, 1).is_zero());
  CHECK_THROWS_AS(extract_coefficient(s, 1, 2), TruncationError);
}

TEST_CASE("property: series arithmetic is associative and commutative") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const BivariateSeries a = random_series(rng, 5);
    const BivariateSeries b = random_series(rng, 5);
    const BivariateSeries c = random_series(rng, 5);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).empty());
    const BivariateSeries combined = a * b + c;
    for (const auto& [key, coefficient] : combined.terms()) {
      CHECK(!coefficient.is_zero());
      CHECK(key.first >= 1);
      CHECK(key.first <= 5);
    }
  }
}

TEST_CASE("property: formal weights specialize to the concrete expansion") {
  // sum_{p} (N - p) log(1 - p t) with N formal, against the same sum with N
  // fixed and every log expanded separately.
  const unsigned order = 6;
  for (unsigned n = 1; n <= 6; ++n) {
    BivariateSeries formal(order);
    UnivariateSeries concrete(order);
    for (unsigned p = 1; p <= n; ++p) {
      formal += log_one_minus(p, Polynomial{-Rational(p), Rational(1)}, order);
      concrete += log_one_minus(p, Rational(n) - Rational(p), order);
    }
    CHECK(formal.specialize(n) == concrete);
  }
}

TEST_CASE("univariate helpers") {
  UnivariateSeries geo(4);
  for (unsigned m = 1; m <= 4; ++m) {
    geo.add_term(m, 1);
  }
  const UnivariateSeries sq = pow(geo, 2);  // t^2/(1-t)^2 = sum (k-1) t^k
  CHECK(sq.coefficient(2) == 1);
  CHECK(sq.coefficient(3) == 2);
  CHECK(sq.coefficient(4) == 3);
  CHECK(sq.truncate(3).order() == 3);
  CHECK_THROWS_AS(sq.truncate(5), TruncationError);
  CHECK_THROWS_AS(sq.coefficient(5), TruncationError);
}
