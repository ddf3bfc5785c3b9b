#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "moduli_euler/ghj_model.hpp"
#include "moduli_euler/rational.hpp"

namespace moduli_euler {

/// χ(M_g^s) = (-1)^s (g+s-2)! / ((g+1)(g-1)!) · B_{g+1}, odd g.
Rational chi_orbifold(unsigned g, unsigned s);

/// Even g: (-1)^s (g+s-2)! / (2 g!) · (q^g - q) B_g.
Rational xi_even(unsigned q, unsigned g, unsigned s);

/// Odd g: χ(M_g^s) + (-1)^s (g+s-2)!/g! · q^{g-1} · weighted_bernoulli_sum(g, q).
Rational xi_odd(unsigned q, unsigned g, unsigned s);

/// Odd g, convolution form:
/// (g+s-2)! (-1)^{s+1} / (g+1)! · { (g+1) B_g q^g + sum_{r=0}^{g+1} C(g+1,r) B_{g+1-r} B_r q^r }.
Rational xi_ghj_polynomial(unsigned q, unsigned g, unsigned s);

/// Dispatches on the parity of g.
XiRecord xi_closed(unsigned q, unsigned g, unsigned s);

/// sum_{r=start}^{n} C(n,r) B_{n-r} B_r q^r.
Rational bernoulli_convolution(unsigned n, const Rational& q, unsigned start);

/// Even-index form sum_{r=start}^{n/2} C(n,2r) B_{n-2r} B_{2r} q^{2r} (n even).
Rational even_bernoulli_convolution(unsigned n, const Rational& q, unsigned start);

/// The integrality composite
/// 2 q^{g-1} sum_{i=1}^{floor((q-1)/2)} i B_g(i/q) - (B_{g+1} + 1/(g+1) sum_{r=1}^{g+1} C(g+1,r) B_{g+1-r} B_r q^r).
Rational integrality_composite(unsigned g, unsigned q);

enum class Identity { p21, p22, identity1, identity2, am_integrality, p20_equality };

std::string_view to_string(Identity identity);
/// Throws PreconditionError on an unknown name.
Identity parse_identity(std::string_view name);

/// Inclusive sweep bounds. `g` is the identity's own index (the half-index
/// of B_{2g} for identity1/identity2). Bounds below an identity's natural
/// domain are clamped up to it.
struct IdentityRange {
  unsigned q_min = 1;
  unsigned q_max = 8;
  unsigned g_min = 1;
  unsigned g_max = 8;
  unsigned s_max = 5;
  unsigned convolution_start = 0;
};

struct Counterexample {
  std::string parameters;
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  Identity identity = Identity::p21;
  std::string parameter_range;
  std::size_t cases_checked = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

/// Exhaustive exact check of one identity over `range` (g <= 15, q <= 12).
IdentityReport check_identity(Identity identity, const IdentityRange& range);

}  // namespace moduli_euler
