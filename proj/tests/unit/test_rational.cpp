#include <doctest.h>

#include <random>

#include "moduli_euler/rational.hpp"

using moduli_euler::Integer;
using moduli_euler::Rational;

TEST_CASE("rationals are stored normalized") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational().denominator() == 1);
  CHECK(Rational(Integer(0), Integer(-7)).to_string() == "0");
  CHECK((Rational(1) / Rational(3) + Rational(2) / Rational(3)).to_string() == "1");
}

TEST_CASE("rational formatting and parsing") {
  CHECK(Rational(Integer(-691), Integer(2730)).to_string() == "-691/2730");
  CHECK(Rational(42).to_string() == "42");
  CHECK(Rational::parse("-3/12") == Rational(Integer(-1), Integer(4)));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(moduli_euler::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("factorial and binomial") {
  CHECK(moduli_euler::factorial(0) == 1);
  CHECK(moduli_euler::factorial(25).get_str() == "15511210043330985984000000");
  CHECK(moduli_euler::binomial(10, 3) == 120);
  CHECK(moduli_euler::binomial(3, 10) == 0);
}

TEST_CASE("property: field laws and text round trip") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 500);
  for (int i = 0; i < 300; ++i) {
    const Rational a(Integer(num(rng)), Integer(den(rng)));
    const Rational b(Integer(num(rng)), Integer(den(rng)));
    const Rational c(Integer(num(rng)), Integer(den(rng)));
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
    }
    CHECK(Rational::parse(a.to_string()) == a);
    CHECK(a.denominator() > 0);
  }
}
