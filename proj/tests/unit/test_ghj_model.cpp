#include <doctest.h>

#include "moduli_euler/bernoulli.hpp"
#include "moduli_euler/closed_forms.hpp"
#include "moduli_euler/errors.hpp"
#include "moduli_euler/ghj_model.hpp"

using namespace moduli_euler;

namespace {

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

Polynomial t_poly(std::initializer_list<long> c) {
  std::vector<Rational> coefficients;
  for (long v : c) {
    coefficients.emplace_back(v);
  }
  return Polynomial(std::move(coefficients));
}

}  // namespace

TEST_CASE("product identity small cases") {
  const auto a = product_identity_sides(2, 1);
  CHECK(a.holds());
  CHECK(a.lhs == t_poly({1, -1}));

  const auto b = product_identity_sides(2, 2);
  CHECK(b.holds());
  CHECK(b.lhs == t_poly({1, -7, 17, -17, 6}));

  const auto c = product_identity_sides(3, 1);
  CHECK(c.holds());
  CHECK(c.lhs == Polynomial::one_minus(1) * Polynomial::one_minus(2));

  CHECK_THROWS_AS(product_identity_sides(1, 2), PreconditionError);
  CHECK_THROWS_AS(product_identity_sides(3, 0), PreconditionError);
}

TEST_CASE("product identity holds for q = 2..5, K = 1..4") {
  for (unsigned q = 2; q <= 5; ++q) {
    for (unsigned k = 1; k <= 4; ++k) {
      const auto sides = product_identity_sides(q, k);
      CAPTURE(q);
      CAPTURE(k);
      CHECK(sides.lhs_remainder.is_zero());
      CHECK(sides.lhs == sides.rhs);
      CHECK(sides.rhs == sides.congruence_form);
      // Degree: sum_{j<K} (N - qj - 1) = K(K+1)q/2 - K
      CHECK(sides.lhs.degree() == static_cast<int>(k * (k + 1) * q / 2 - k));
    }
  }
}

TEST_CASE("model parameter validation") {
  CHECK_NOTHROW((ModelParams{3, 4, 6}.validate()));
  CHECK_THROWS_AS((ModelParams{3, 4, 4}.validate()), PreconditionError);
  CHECK_THROWS_AS((ModelParams{0, 4, std::nullopt}.validate()), PreconditionError);
  CHECK_THROWS_AS((ModelParams{2, 0, std::nullopt}.validate()), PreconditionError);
  CHECK_THROWS_AS(free_energy_concrete((ModelParams{2, 4, std::nullopt})), PreconditionError);
}

TEST_CASE("formal free energy: Penner case") {
  const auto parts = free_energy_formal_parts(ModelParams{1, 4, std::nullopt});
  CHECK(parts.deformation.empty());
  const BivariateSeries total = parts.total();
  CHECK(total.coefficient(1, 1) == frac(1, 12));
  CHECK(parts.penner_product.coefficient(1, 1) == frac(1, 6));
  CHECK(parts.prefactor.coefficient(1, 1) == frac(-1, 12));
}

TEST_CASE("formal free energy: orthogonal Penner deformation") {
  // For q = 2 the deformation is sum_{p<=N} log(1-pt) - sum_{p<=N/2} log(1-2pt).
  const unsigned order = 6;
  const auto parts = free_energy_formal_parts(ModelParams{2, order, std::nullopt});
  for (unsigned n = 2; n <= 10; n += 2) {
    UnivariateSeries direct(order);
    for (unsigned p = 1; p <= n; ++p) {
      direct += log_one_minus(p, Rational(1), order);
    }
    for (unsigned p = 1; p <= n / 2; ++p) {
      direct -= log_one_minus(2 * p, Rational(1), order);
    }
    CHECK(parts.deformation.specialize(n) == direct);
  }
}

TEST_CASE("formal free energy: frozen q = 3 coefficients") {
  const BivariateSeries f = free_energy_formal(ModelParams{3, 3, std::nullopt});
  CHECK(f.t_coefficient(2) == Polynomial{Rational(0), frac(1, 4), frac(-1, 24), frac(-1, 6), frac(-1, 24)});
  CHECK(f.t_coefficient(3) ==
        Polynomial{Rational(0), frac(37, 360), frac(1, 4), frac(-1, 36), frac(-1, 12), frac(-1, 60)});
}

TEST_CASE("formal free energy: N-degree bound") {
  // Genus >= 1 needs s <= m. The Penner block reaches N^{m+2} but its
  // N^{m+1} coefficient cancels; genus-0 terms come from the deformation
  // and vanish only for q = 1.
  for (unsigned q = 1; q <= 5; ++q) {
    const BivariateSeries f = free_energy_formal(ModelParams{q, 8, std::nullopt});
    for (const auto& [key, c] : f.terms()) {
      CHECK(key.second <= key.first + 2);
      CHECK(key.second >= 1);
    }
    for (unsigned m = 1; m <= 8; ++m) {
      CHECK(!f.coefficient(m, m + 2).is_zero());
      CHECK(f.coefficient(m, m + 1).is_zero() == (q == 1));
    }
  }
}

TEST_CASE("concrete free energy examples") {
  // The concrete path returns q·log of the finite product, like the formal one.
  // q = 2, N = 2: the product is (1 - t), so 2 log(1 - t).
  const UnivariateSeries a = free_energy_concrete(ModelParams{2, 2, 2});
  CHECK(a.coefficient(1) == -2);
  CHECK(a.coefficient(2) == -1);

  const UnivariateSeries b = free_energy_concrete(ModelParams{1, 2, 2});
  CHECK(b.coefficient(1) == -1);
  CHECK(b.coefficient(2) == frac(-1, 2));

  // q = 3, N = 3: (1 - t)(1 - 2t), so 3·(-3t) at first order.
  const UnivariateSeries c = free_energy_concrete(ModelParams{3, 1, 3});
  CHECK(c.coefficient(1) == -9);

  const UnivariateSeries d = free_energy_concrete(ModelParams{3, 4, 6});
  CHECK(d.coefficient(1) == -54);
  CHECK(d.coefficient(2) == -90);
  CHECK(d.coefficient(3) == -234);
  CHECK(d.coefficient(4) == -747);
}

TEST_CASE("formal and concrete free energies agree") {
  for (unsigned q = 1; q <= 4; ++q) {
    const auto parts = free_energy_formal_parts(ModelParams{q, 8, std::nullopt});
    for (unsigned n : {q, 2 * q, 3 * q}) {
      CAPTURE(q);
      CAPTURE(n);
      CHECK(parts.product().specialize(n) == free_energy_concrete(ModelParams{q, 8, n}));
    }
  }
}

TEST_CASE("xi by extraction examples") {
  CHECK(xi_by_extraction(1, 1, 1, 1).value == frac(-1, 12));
  CHECK(xi_by_extraction(2, 2, 1, 2).value == frac(-1, 12));
  CHECK(xi_by_extraction(3, 1, 2, 2).value == frac(-1, 12));
  CHECK(xi_by_extraction(4, 5, 3, 7).value == frac(3145, 42));
  CHECK(xi_by_extraction(6, 7, 1, 7).value == frac(-217279, 240));
  CHECK(xi_by_extraction(3, 1, 2, 2).path == XiPath::series_extraction);

  CHECK_THROWS_AS(xi_by_extraction(2, 3, 2, 3), TruncationError);
  CHECK_THROWS_AS(xi_by_extraction(2, 1, 0, 3), PreconditionError);
  CHECK_THROWS_AS(xi_by_extraction(2, 0, 3, 3), PreconditionError);
}

TEST_CASE("extraction never sees an N^0 term") {
  // W(N = 0, t) = 1, so s = 0 always extracts zero.
  for (unsigned q = 1; q <= 4; ++q) {
    for (unsigned g = 2; g <= 6; ++g) {
      CHECK(xi_by_extraction(q, g, 0, 6).value.is_zero());
    }
  }
}

TEST_CASE("Penner and orthogonal Penner reductions") {
  for (unsigned q : {1u, 2u}) {
    const BivariateSeries f = free_energy_formal(ModelParams{q, 8, std::nullopt});
    for (unsigned g = 1; g <= 8; ++g) {
      for (unsigned s = 1; g + s - 1 <= 8; ++s) {
        const Rational xi = xi_by_extraction(f, q, g, s).value;
        if (g % 2 == 1) {
          CHECK(xi == chi_orbifold(g, s));
        } else if (q == 1) {
          CHECK(xi.is_zero());
        } else {
          CHECK(xi == xi_even(2, g, s));
        }
      }
    }
  }
}

TEST_CASE("extraction agrees with closed forms for s >= 1") {
  for (unsigned q = 1; q <= 6; ++q) {
    const BivariateSeries f = free_energy_formal(ModelParams{q, 8, std::nullopt});
    for (unsigned g = 1; g <= 8; ++g) {
      for (unsigned s = 1; g + s - 1 <= 8; ++s) {
        CAPTURE(q);
        CAPTURE(g);
        CAPTURE(s);
        CHECK(xi_by_extraction(f, q, g, s).value == xi_closed(q, g, s).value);
      }
    }
  }
}
