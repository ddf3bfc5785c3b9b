#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moduli_euler/rational.hpp"

namespace moduli_euler {

inline constexpr unsigned kDefaultGenusMax = 8;

enum class Sector { even_genus, odd_genus };

std::string_view to_string(Sector sector);
/// Accepts "even" / "odd". Throws PreconditionError otherwise.
Sector parse_sector(std::string_view name);

/// coefficient · μ^mu_power · (log μ if log_mu). The coefficient is split into
/// the part inherited from the Penner model and the q-deformation part.
struct ContinuumTerm {
  int mu_power = 0;
  bool log_mu = false;
  Rational coefficient;
  Rational penner_part;
  Rational deformation_part;

  /// "mu^-3", "mu*log(mu)", "log(mu)", ...
  std::string label() const;
};

/// F_q(μ) for one parity sector, sorted by descending μ power. Terms whose
/// coefficient vanishes are omitted.
struct ContinuumExpansion {
  unsigned q = 1;
  Sector sector = Sector::even_genus;
  unsigned genus_max = 0;
  std::vector<ContinuumTerm> terms;

  /// Zero when the term is absent.
  Rational coefficient(int mu_power, bool log_mu) const;
  const ContinuumTerm* find(int mu_power, bool log_mu) const;
};

/// Even sector: ((1/q - 1)/2) μ log μ + sum_{g=1}^{genus_max} μ^{1-2g}
/// (q^{2g-1} - 1) B_{2g} / (2 · 2g (2g-1)).
ContinuumExpansion even_sector_expansion(unsigned q, unsigned genus_max = kDefaultGenusMax);

/// Odd sector: μ² log μ / (2q), the combined log μ term, and for g >= 2 the
/// μ^{2-2g} coefficient B_{2g}/(q(2g-2)2g) + q^{2g-3} W_{2g-1}(q)/((2g-1)(2g-2)),
/// W being the weighted Bernoulli sum.
ContinuumExpansion odd_sector_expansion(unsigned q, unsigned genus_max = kDefaultGenusMax);

/// Coefficients of single sector terms, exposed for cross-checks.
Rational even_sector_coefficient(unsigned q, unsigned g);
Rational odd_sector_penner_coefficient(unsigned q, unsigned g);
Rational odd_sector_deformation_coefficient(unsigned q, unsigned g);
/// q/12 - 1/4 + 1/(6q): the deformation share of the log(1-t) / log μ term.
Rational odd_sector_log_deformation(unsigned q);

struct ResummationReport {
  bool passed = true;
  unsigned q = 1;
  unsigned g = 1;
  unsigned compared_order = 0;
  std::vector<std::string> checks;
  /// First differing coefficient, if any.
  std::optional<std::string> mismatch;
};

/// Re-sums the discrete genus-g free energy over punctures s <= max_punctures
/// as truncated exact series in t and compares it with the closed resummed
/// form, in both sectors:
///   even:  sum_s (2g+s-2)!/s! t^{2g-1+s} = (2g-2)! (t/(1-t))^{2g-1}, and
///          sum_s (1/q)(-1)^s/s! ξ^s_{2g} t^{2g-1+s} = c_even (t/(1-t))^{2g-1};
///   odd:   the analogous (t/(1-t))^{2g-2} statement for g >= 2, and at g = 1
///          the log(1-t) term with coefficient equal to the log μ coefficient.
/// Throws PreconditionError when order < 2g-1 or max_punctures < 2.
ResummationReport resummation_check(unsigned q, unsigned g, unsigned max_punctures, unsigned order);

}  // namespace moduli_euler
