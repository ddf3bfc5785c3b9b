#include <doctest.h>

#include <thread>
#include <vector>

#include "moduli_euler/bernoulli.hpp"
#include "moduli_euler/errors.hpp"

using namespace moduli_euler;

namespace {
Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }
}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == frac(-1, 2));
  CHECK(bernoulli_number(2) == frac(1, 6));
  CHECK(bernoulli_number(12) == frac(-691, 2730));
  CHECK(bernoulli_number(20) == frac(-174611, 330));
  CHECK(bernoulli_number(30).to_string() == "8615841276005/14322");
}

TEST_CASE("odd bernoulli numbers vanish beyond B_1") {
  for (unsigned n = 1; n <= 25; ++n) {
    CHECK(bernoulli_number(2 * n + 1).is_zero());
  }
}

TEST_CASE("bernoulli polynomial values") {
  CHECK(bernoulli_polynomial(1, frac(1, 3)) == frac(-1, 6));
  CHECK(bernoulli_polynomial(1, frac(1, 4)) == frac(-1, 4));
  CHECK(bernoulli_polynomial(3, frac(1, 3)) == frac(1, 27));
  CHECK(bernoulli_polynomial(3, frac(1, 4)) == frac(3, 64));
  CHECK(bernoulli_polynomial(5, frac(2, 7)) == frac(-395, 16807));
  CHECK(bernoulli_polynomial(4, frac(3, 5)) == frac(91, 3750));
  for (unsigned n = 0; n <= 14; ++n) {
    CHECK(bernoulli_polynomial(n, Rational()) == bernoulli_number(n));
  }
}

TEST_CASE("reflection B_n(1-x) = (-1)^n B_n(x)") {
  for (unsigned n = 0; n <= 15; ++n) {
    for (unsigned q = 2; q <= 8; ++q) {
      for (unsigned i = 1; i < q; ++i) {
        const Rational x = frac(i, q);
        CHECK(bernoulli_polynomial(n, Rational(1) - x) == bernoulli_polynomial(n, x) * Rational(sign_power(n)));
      }
    }
  }
}

TEST_CASE("multiplication theorem at x = 0") {
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 1; k <= 8; ++k) {
      Rational sum;
      for (unsigned j = 0; j < k; ++j) {
        sum += bernoulli_polynomial(n, frac(j, k));
      }
      CHECK(sum == pow(Rational(k), 1 - static_cast<int>(n)) * bernoulli_number(n));
    }
  }
}

TEST_CASE("power sum polynomial examples") {
  CHECK(power_sum_polynomial(1).evaluate(4) == 10);
  CHECK(power_sum_polynomial(2).evaluate(3) == 14);
  CHECK(power_sum_polynomial(3).evaluate(2) == 9);
  const auto p = power_sum_polynomial(0);
  CHECK(p.polynomial() == Polynomial{Rational(0), Rational(1)});
}

TEST_CASE("power sum polynomial matches brute force") {
  for (unsigned k = 0; k <= 10; ++k) {
    const auto poly = power_sum_polynomial(k);
    CHECK(poly.polynomial().degree() == static_cast<int>(k) + 1);
    CHECK(poly.polynomial().coefficient(0).is_zero());
    Integer brute = 0;
    for (unsigned n = 1; n <= 50; ++n) {
      Integer term;
      mpz_ui_pow_ui(term.get_mpz_t(), n, k);
      brute += term;
      CHECK(poly.evaluate(n) == Rational(brute));
    }
  }
}

TEST_CASE("weighted bernoulli sum") {
  CHECK(weighted_bernoulli_sum(1, 3) == frac(-1, 6));
  CHECK(weighted_bernoulli_sum(3, 3) == frac(1, 27));
  CHECK(weighted_bernoulli_sum(5, 2).is_zero());
  CHECK(weighted_bernoulli_sum(5, 1).is_zero());
  CHECK(weighted_bernoulli_sum(5, 7) == frac(-3030, 16807));
  CHECK(weighted_bernoulli_sum(3, 8) == frac(63, 128));
  CHECK_THROWS_AS(weighted_bernoulli_sum(2, 5), PreconditionError);
  CHECK_THROWS_AS(weighted_bernoulli_sum(3, 0), PreconditionError);
  CHECK(weighted_sum_upper_index(7) == 3);
  CHECK(weighted_sum_upper_index(8) == 3);
  CHECK(weighted_sum_upper_index(2) == 0);
}

TEST_CASE("weighted sum at g = 1 is a quadratic in q") {
  for (unsigned q = 3; q <= 12; ++q) {
    const Rational qr(q);
    CHECK(weighted_bernoulli_sum(1, q) == -(qr * qr / Rational(12) - qr / Rational(4) + frac(1, 6)));
  }
}

TEST_CASE("weighted sum for odd g > 1 as a Bernoulli convolution") {
  for (unsigned g = 3; g <= 11; g += 2) {
    for (unsigned q = 2; q <= 8; ++q) {
      const Rational qr(q);
      Rational conv;
      for (unsigned r = 1; r <= g + 1; ++r) {
        conv += Rational(binomial(g + 1, r)) * bernoulli_number(g + 1 - r) * bernoulli_number(r) *
                pow(qr, static_cast<int>(r));
      }
      const Rational rhs = -pow(qr, 1 - static_cast<int>(g)) * (bernoulli_number(g + 1) + conv / Rational(g + 1));
      CHECK(weighted_bernoulli_sum(g, q) == rhs);
    }
  }
}

TEST_CASE("table is deterministic under concurrent extension") {
  BernoulliTable reference;
  std::vector<Rational> expected;
  for (unsigned n = 0; n <= 60; ++n) {
    expected.push_back(reference(n));
  }

  BernoulliTable shared;
  std::vector<std::vector<Rational>> seen(8, std::vector<Rational>(61));
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      for (unsigned i = 0; i <= 60; ++i) {
        const unsigned n = (w % 2 == 0) ? 60 - i : (i * 7 + w) % 61;
        seen[w][n] = shared(n);
      }
    });
  }
  for (auto& t : workers) {
    t.join();
  }
  for (const auto& row : seen) {
    CHECK(row == expected);
  }
  CHECK(shared.size() == 61);
  CHECK(shared(30) == reference(30));
  CHECK(shared.size() == 61);
}
