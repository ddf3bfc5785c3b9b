#pragma once

#include <optional>
#include <string_view>

#include "moduli_euler/polynomial.hpp"
#include "moduli_euler/rational.hpp"
#include "moduli_euler/series.hpp"

namespace moduli_euler {

inline constexpr unsigned kDefaultOrder = 12;

/// Deformation parameter γ = 1/q, truncation order in t, and an optional
/// concrete matrix size N (a multiple of q).
struct ModelParams {
  unsigned q = 1;
  unsigned order = kDefaultOrder;
  std::optional<unsigned> matrix_size;

  /// Throws PreconditionError on q == 0, order == 0 or N mod q != 0.
  void validate() const;
};

enum class XiPath { series_extraction, closed_form };

std::string_view to_string(XiPath path);

/// One value ξ^s_g(1/q).
struct XiRecord {
  unsigned g = 1;
  unsigned s = 1;
  unsigned q = 1;
  Rational value;
  XiPath path = XiPath::series_extraction;
};

/// Throws PreconditionError unless g >= 1 and g + s >= 2.
void require_xi_domain(unsigned g, unsigned s);

/// The three expanded forms of the finite product for N = qK:
///   quotient:    prod_{l<=K} prod_{j<=ql} (1-jt)  /  prod_{j<=K} (1-qjt)
///   nested:      prod_{j=0}^{K-1} prod_{p=1}^{N-(qj+1)} (1-pt)
///   congruence:  prod_{p<=K} prod_{c<q} (1-(qp-(q-c))t)^{K-p+1} · (1-qpt)^{K-p}
struct ProductIdentitySides {
  Polynomial lhs;
  Polynomial lhs_remainder;
  Polynomial rhs;
  Polynomial congruence_form;

  bool holds() const { return lhs_remainder.is_zero() && lhs == rhs && rhs == congruence_form; }
};

/// Requires q >= 2 and K >= 1.
ProductIdentitySides product_identity_sides(unsigned q, unsigned k);

/// q·log W_{1/q}(N, t) split into the transcendental prefactor
/// N·log(√(2πt)/(Γ(1/t)(et)^{1/t})) and the finite-product logarithm.
struct FreeEnergyParts {
  BivariateSeries prefactor;
  BivariateSeries penner_product;  // sum_{p=1}^{N} (N-p) log(1-pt)
  BivariateSeries deformation;     // remaining congruence-class logarithms

  BivariateSeries product() const { return penner_product + deformation; }
  BivariateSeries total() const { return prefactor + penner_product + deformation; }
};

/// Formal-N expansion: every finite sum over p is replaced by its power-sum
/// polynomial in N (or N/q), so coefficients are polynomials in N.
FreeEnergyParts free_energy_formal_parts(const ModelParams& params);
BivariateSeries free_energy_formal(const ModelParams& params);

/// Direct expansion of the finite product at params.matrix_size, term by
/// term, without the prefactor. Requires matrix_size.
UnivariateSeries free_energy_concrete(const ModelParams& params);

/// ξ^s_g(1/q) = s!(-1)^s [N^s t^{g+s-1}] q·log W_{1/q}.
XiRecord xi_by_extraction(unsigned q, unsigned g, unsigned s, unsigned order);

/// Same, reading from an already expanded free energy for this q.
XiRecord xi_by_extraction(const BivariateSeries& free_energy, unsigned q, unsigned g, unsigned s);

}  // namespace moduli_euler
