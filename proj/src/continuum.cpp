#include "moduli_euler/continuum.hpp"

#include <algorithm>
#include <string>

#include "moduli_euler/bernoulli.hpp"
#include "moduli_euler/closed_forms.hpp"
#include "moduli_euler/errors.hpp"
#include "moduli_euler/series.hpp"

namespace moduli_euler {
namespace {

void require_q(unsigned q) {
  if (q == 0) {
    throw PreconditionError("q must be >= 1");
  }
}

void push_term(ContinuumExpansion& out, int mu_power, bool log_mu, const Rational& penner, const Rational& deformation) {
  const Rational total = penner + deformation;
  if (total.is_zero()) {
    return;
  }
  out.terms.push_back({mu_power, log_mu, total, penner, deformation});
}

void sort_terms(ContinuumExpansion& out) {
  std::stable_sort(out.terms.begin(), out.terms.end(), [](const ContinuumTerm& a, const ContinuumTerm& b) {
    if (a.mu_power != b.mu_power) {
      return a.mu_power > b.mu_power;
    }
    return a.log_mu && !b.log_mu;
  });
}

// t/(1-t) = t + t^2 + ... through `order`.
UnivariateSeries geometric(unsigned order) {
  UnivariateSeries out(order);
  for (unsigned m = 1; m <= order; ++m) {
    out.add_term(m, 1);
  }
  return out;
}

// Compares coefficient by coefficient; records the first difference.
void compare(ResummationReport& report, const std::string& name, const UnivariateSeries& lhs,
             const UnivariateSeries& rhs) {
  report.checks.push_back(name);
  for (unsigned m = 1; m <= lhs.order(); ++m) {
    const Rational a = lhs.coefficient(m);
    const Rational b = rhs.coefficient(m);
    if (a != b) {
      report.passed = false;
      if (!report.mismatch) {
        report.mismatch = name + ": t^" + std::to_string(m) + " coefficient " + a.to_string() + " vs " + b.to_string();
      }
      return;
    }
  }
}

}  // namespace

std::string_view to_string(Sector sector) { return sector == Sector::even_genus ? "even" : "odd"; }

Sector parse_sector(std::string_view name) {
  if (name == "even") {
    return Sector::even_genus;
  }
  if (name == "odd") {
    return Sector::odd_genus;
  }
  throw PreconditionError("sector must be even or odd, got " + std::string(name));
}

std::string ContinuumTerm::label() const {
  std::string power;
  if (mu_power == 1) {
    power = "mu";
  } else if (mu_power != 0) {
    power = "mu^" + std::to_string(mu_power);
  }
  if (!log_mu) {
    return power.empty() ? "1" : power;
  }
  return power.empty() ? "log(mu)" : power + "*log(mu)";
}

const ContinuumTerm* ContinuumExpansion::find(int mu_power, bool log_mu) const {
  for (const auto& term : terms) {
    if (term.mu_power == mu_power && term.log_mu == log_mu) {
      return &term;
    }
  }
  return nullptr;
}

Rational ContinuumExpansion::coefficient(int mu_power, bool log_mu) const {
  const ContinuumTerm* term = find(mu_power, log_mu);
  return term ? term->coefficient : Rational();
}

Rational even_sector_coefficient(unsigned q, unsigned g) {
  require_q(q);
  if (g == 0) {
    throw PreconditionError("even sector genus index must be >= 1");
  }
  const Rational q_term = pow(Rational(q), static_cast<int>(2 * g - 1)) - Rational(1);
  return q_term * bernoulli_number(2 * g) / Rational(2 * (2 * g) * (2 * g - 1));
}

Rational odd_sector_penner_coefficient(unsigned q, unsigned g) {
  require_q(q);
  if (g < 2) {
    throw PreconditionError("odd sector power terms start at g = 2");
  }
  return bernoulli_number(2 * g) / Rational(q * (2 * g - 2) * (2 * g));
}

Rational odd_sector_deformation_coefficient(unsigned q, unsigned g) {
  require_q(q);
  if (g < 2) {
    throw PreconditionError("odd sector power terms start at g = 2");
  }
  return pow(Rational(q), static_cast<int>(2 * g) - 3) * weighted_bernoulli_sum(2 * g - 1, q) /
         Rational((2 * g - 1) * (2 * g - 2));
}

Rational odd_sector_log_deformation(unsigned q) {
  require_q(q);
  const Rational qr(q);
  return qr / Rational(12) - Rational(Integer(1), Integer(4)) + Rational(1) / (Rational(6) * qr);
}

ContinuumExpansion even_sector_expansion(unsigned q, unsigned genus_max) {
  require_q(q);
  if (genus_max < 1) {
    throw PreconditionError("even sector needs genus_max >= 1");
  }
  ContinuumExpansion out{q, Sector::even_genus, genus_max, {}};
  // The μ log μ term is pure deformation: it vanishes for the Penner model.
  push_term(out, 1, true, Rational(), (Rational(1) / Rational(q) - Rational(1)) / Rational(2));
  for (unsigned g = 1; g <= genus_max; ++g) {
    push_term(out, 1 - 2 * static_cast<int>(g), false, Rational(), even_sector_coefficient(q, g));
  }
  sort_terms(out);
  return out;
}

ContinuumExpansion odd_sector_expansion(unsigned q, unsigned genus_max) {
  require_q(q);
  if (genus_max < 2) {
    throw PreconditionError("odd sector needs genus_max >= 2");
  }
  ContinuumExpansion out{q, Sector::odd_genus, genus_max, {}};
  const Rational qr(q);
  push_term(out, 2, true, Rational(1) / (Rational(2) * qr), Rational());
  // -1/(12q) from the Penner part, (1/q)(q²/12 - q/4 + 1/6) from the deformation.
  push_term(out, 0, true, -Rational(1) / (Rational(12) * qr), odd_sector_log_deformation(q));
  for (unsigned g = 2; g <= genus_max; ++g) {
    push_term(out, 2 - 2 * static_cast<int>(g), false, odd_sector_penner_coefficient(q, g),
              odd_sector_deformation_coefficient(q, g));
  }
  sort_terms(out);
  return out;
}

ResummationReport resummation_check(unsigned q, unsigned g, unsigned max_punctures, unsigned order) {
  require_q(q);
  if (g == 0) {
    throw PreconditionError("resummation needs g >= 1");
  }
  if (max_punctures < 2) {
    throw PreconditionError("resummation needs at least 2 punctures retained");
  }
  if (order < 2 * g - 1) {
    throw PreconditionError("resummation of genus " + std::to_string(g) + " needs order >= " +
                            std::to_string(2 * g - 1));
  }
  ResummationReport report;
  report.q = q;
  report.g = g;
  const Rational inv_q = Rational(1) / Rational(q);

  // Even sector, genus index G = 2g: t-powers 2g-1+s. Only orders reached by
  // the retained punctures are comparable.
  {
    const unsigned cmp_order = std::min(order, 2 * g - 1 + max_punctures);
    report.compared_order = cmp_order;
    UnivariateSeries factorial_side(cmp_order);
    UnivariateSeries xi_side(cmp_order);
    for (unsigned s = 0; 2 * g - 1 + s <= cmp_order; ++s) {
      const unsigned power = 2 * g - 1 + s;
      factorial_side.add_term(power, Rational(factorial(2 * g + s - 2)) / Rational(factorial(s)));
      xi_side.add_term(power, inv_q * Rational(sign_power(s)) / Rational(factorial(s)) * xi_even(q, 2 * g, s));
    }
    const UnivariateSeries resummed = pow(geometric(cmp_order), 2 * g - 1);
    compare(report, "even puncture sum", factorial_side, resummed * Rational(factorial(2 * g - 2)));
    const ContinuumExpansion even = even_sector_expansion(q, g);
    compare(report, "even sector genus " + std::to_string(g), xi_side,
            resummed * even.coefficient(1 - 2 * static_cast<int>(g), false));
  }

  // Odd sector, genus index G = 2g-1: t-powers 2g-2+s.
  {
    const ContinuumExpansion odd = odd_sector_expansion(q, std::max(g, 2u));
    if (g == 1) {
      const unsigned cmp_order = std::min(order, max_punctures);
      UnivariateSeries xi_side(cmp_order);
      UnivariateSeries penner_side(cmp_order);
      for (unsigned s = 1; s <= cmp_order; ++s) {
        const Rational scale = inv_q * Rational(sign_power(s)) / Rational(factorial(s));
        xi_side.add_term(s, scale * xi_odd(q, 1, s));
        penner_side.add_term(s, scale * chi_orbifold(1, s));
      }
      // log(1 - t) -> log μ in the double-scaling limit.
      const ContinuumTerm* log_term = odd.find(0, true);
      const Rational log_coefficient = log_term ? log_term->coefficient : Rational();
      const Rational log_penner = log_term ? log_term->penner_part : Rational();
      compare(report, "odd sector log(1-t)", xi_side, log_one_minus(1, log_coefficient, cmp_order));
      compare(report, "odd sector log(1-t) Penner part", penner_side, log_one_minus(1, log_penner, cmp_order));
      compare(report, "odd sector log(1-t) deformation part", xi_side - penner_side,
              log_one_minus(1, odd_sector_log_deformation(q), cmp_order));
    } else {
      const unsigned cmp_order = std::min(order, 2 * g - 2 + max_punctures);
      UnivariateSeries factorial_side(cmp_order);
      UnivariateSeries xi_side(cmp_order);
      for (unsigned s = 0; 2 * g - 2 + s <= cmp_order; ++s) {
        const unsigned power = 2 * g - 2 + s;
        factorial_side.add_term(power, Rational(factorial(2 * g + s - 3)) / Rational(factorial(s)));
        xi_side.add_term(power, inv_q * Rational(sign_power(s)) / Rational(factorial(s)) * xi_odd(q, 2 * g - 1, s));
      }
      const UnivariateSeries resummed = pow(geometric(cmp_order), 2 * g - 2);
      compare(report, "odd puncture sum", factorial_side, resummed * Rational(factorial(2 * g - 3)));
      compare(report, "odd sector genus " + std::to_string(g), xi_side,
              resummed * odd.coefficient(2 - 2 * static_cast<int>(g), false));
    }
  }
  return report;
}

}  // namespace moduli_euler
