#include "moduli_euler/ghj_model.hpp"

#include <string>

#include "moduli_euler/bernoulli.hpp"
#include "moduli_euler/errors.hpp"

namespace moduli_euler {
namespace {

// weight_j = sum_{c=2}^{q-1} (c-1) ((q-c)/q)^j: the congruence-class weights
// left over once sum_{p<=N} log(1-pt) - sum_{p<=N/q} log(1-qpt) is split off.
Rational congruence_weight(unsigned q, unsigned j) {
  Rational sum;
  for (unsigned c = 2; c + 1 <= q; ++c) {
    sum += Rational(c - 1) * pow(Rational(Integer(q - c), Integer(q)), static_cast<int>(j));
  }
  return sum;
}

}  // namespace

void ModelParams::validate() const {
  if (q == 0) {
    throw PreconditionError("q must be >= 1");
  }
  if (order == 0) {
    throw PreconditionError("truncation order must be >= 1");
  }
  if (matrix_size && (*matrix_size == 0 || *matrix_size % q != 0)) {
    throw PreconditionError("matrix size N=" + std::to_string(*matrix_size) + " is not a positive multiple of q=" +
                            std::to_string(q));
  }
}

std::string_view to_string(XiPath path) {
  return path == XiPath::series_extraction ? "series_extraction" : "closed_form";
}

void require_xi_domain(unsigned g, unsigned s) {
  if (g == 0) {
    throw PreconditionError("genus index g must be >= 1");
  }
  if (g + s < 2) {
    throw PreconditionError("xi needs g + s >= 2, got g=" + std::to_string(g) + " s=" + std::to_string(s));
  }
}

ProductIdentitySides product_identity_sides(unsigned q, unsigned k) {
  if (q < 2) {
    throw PreconditionError("product identity is stated for q >= 2");
  }
  if (k == 0) {
    throw PreconditionError("product identity needs K >= 1");
  }
  const unsigned n = q * k;

  Polynomial numerator{Rational(1)};
  for (unsigned l = 1; l <= k; ++l) {
    for (unsigned j = 1; j <= q * l; ++j) {
      numerator *= Polynomial::one_minus(Rational(j));
    }
  }
  Polynomial denominator{Rational(1)};
  for (unsigned j = 1; j <= k; ++j) {
    denominator *= Polynomial::one_minus(Rational(q * j));
  }
  auto [quotient, remainder] = divide(numerator, denominator);

  Polynomial nested{Rational(1)};
  for (unsigned j = 0; j < k; ++j) {
    for (unsigned p = 1; p + q * j + 1 <= n; ++p) {
      nested *= Polynomial::one_minus(Rational(p));
    }
  }

  Polynomial congruence{Rational(1)};
  for (unsigned p = 1; p <= k; ++p) {
    for (unsigned c = 1; c < q; ++c) {
      congruence *= pow(Polynomial::one_minus(Rational(q * p - (q - c))), k - p + 1);
    }
    congruence *= pow(Polynomial::one_minus(Rational(q * p)), k - p);
  }

  return {std::move(quotient), std::move(remainder), std::move(nested), std::move(congruence)};
}

FreeEnergyParts free_energy_formal_parts(const ModelParams& params) {
  params.validate();
  const unsigned q = params.q;
  const unsigned order = params.order;
  const Rational inv_q = Rational(Integer(1), Integer(q));
  const Polynomial n_var = Polynomial::monomial(Rational(1), 1);

  FreeEnergyParts parts{penner_prefactor_series(order), BivariateSeries(order), BivariateSeries(order)};

  for (unsigned m = 1; m <= order; ++m) {
    const Rational log_scale = Rational(-1) / Rational(m);
    const Rational q_pow = pow(Rational(q), static_cast<int>(m));

    // sum_{p=1}^{N} (N - p) p^m = N S_m(N) - S_{m+1}(N)
    const Polynomial s_m = power_sum_polynomial(m).polynomial();
    const Polynomial penner = n_var * s_m - power_sum_polynomial(m + 1).polynomial();
    parts.penner_product.add_polynomial(m, penner * log_scale);

    // sum_{p<=N} p^m - sum_{p<=N/q} (qp)^m
    Polynomial deformation = s_m - s_m.scale_argument(inv_q) * q_pow;

    // sum_{p<=N/q} (qp - (q-c))^m expanded binomially in p, weighted by (c-1)
    for (unsigned j = 0; j <= m; ++j) {
      const Rational weight = congruence_weight(q, j);
      if (weight.is_zero()) {
        continue;
      }
      const Rational factor = q_pow * Rational(binomial(m, j)) * Rational(sign_power(j)) * weight;
      deformation += power_sum_polynomial(m - j).polynomial().scale_argument(inv_q) * factor;
    }
    parts.deformation.add_polynomial(m, deformation * log_scale);
  }
  return parts;
}

BivariateSeries free_energy_formal(const ModelParams& params) { return free_energy_formal_parts(params).total(); }

UnivariateSeries free_energy_concrete(const ModelParams& params) {
  params.validate();
  if (!params.matrix_size) {
    throw PreconditionError("concrete free energy needs a matrix size N");
  }
  const unsigned q = params.q;
  const unsigned n = *params.matrix_size;
  const unsigned k = n / q;

  // q log of prod_p prod_c (1 - a t)^{mult}: every factor a = qp-(q-c) carries
  // (N - a) from the Penner block plus c extra copies for c < q.
  UnivariateSeries out(params.order);
  for (unsigned p = 1; p <= k; ++p) {
    for (unsigned c = 1; c <= q; ++c) {
      const unsigned a = q * p - (q - c);
      if (n > a) {
        out += log_one_minus(a, Rational(n - a), params.order);
      }
      if (c < q) {
        out += log_one_minus(a, Rational(c), params.order);
      }
    }
  }
  return out;
}

XiRecord xi_by_extraction(const BivariateSeries& free_energy, unsigned q, unsigned g, unsigned s) {
  require_xi_domain(g, s);
  const unsigned m = g + s - 1;
  if (m > free_energy.order()) {
    throw TruncationError("xi(g=" + std::to_string(g) + ", s=" + std::to_string(s) + ") needs order >= " +
                          std::to_string(m) + ", series has " + std::to_string(free_energy.order()));
  }
  const Rational raw = extract_coefficient(free_energy, s, m);
  return XiRecord{g, s, q, raw * Rational(factorial(s)) * Rational(sign_power(s)), XiPath::series_extraction};
}

XiRecord xi_by_extraction(unsigned q, unsigned g, unsigned s, unsigned order) {
  require_xi_domain(g, s);
  if (g + s - 1 > order) {
    throw TruncationError("xi(g=" + std::to_string(g) + ", s=" + std::to_string(s) + ") needs order >= " +
                          std::to_string(g + s - 1));
  }
  return xi_by_extraction(free_energy_formal(ModelParams{q, order, std::nullopt}), q, g, s);
}

}  // namespace moduli_euler
