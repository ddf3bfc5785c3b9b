#include "moduli_euler/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "moduli_euler/bernoulli.hpp"
#include "moduli_euler/errors.hpp"

namespace moduli_euler {
namespace {

void require_odd(unsigned g, const char* what) {
  if (g % 2 == 0) {
    throw PreconditionError(std::string(what) + " is defined for odd g only, got g=" + std::to_string(g));
  }
}

void require_q(unsigned q) {
  if (q == 0) {
    throw PreconditionError("q must be >= 1");
  }
}

// (-1)^s (g+s-2)!
Rational signed_puncture_factorial(unsigned g, unsigned s) { return Rational(factorial(g + s - 2)) * sign_power(s); }

std::string params(std::initializer_list<std::pair<const char*, unsigned>> values) {
  std::string out;
  for (const auto& [name, value] : values) {
    if (!out.empty()) {
      out += " ";
    }
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

std::string range_text(const char* g_name, unsigned g_lo, unsigned g_hi, unsigned q_lo, unsigned q_hi) {
  return std::string(g_name) + "=" + std::to_string(g_lo) + ".." + std::to_string(g_hi) + " q=" + std::to_string(q_lo) +
         ".." + std::to_string(q_hi);
}

unsigned first_odd_at_least(unsigned value) { return value % 2 == 1 ? value : value + 1; }

void record(IdentityReport& report, std::string parameters, const Rational& lhs, const Rational& rhs) {
  ++report.cases_checked;
  if (lhs != rhs) {
    report.counterexamples.push_back({std::move(parameters), lhs, rhs});
  }
}

void record_integer(IdentityReport& report, std::string parameters, const Rational& value) {
  ++report.cases_checked;
  if (!value.is_integer()) {
    Integer truncated;
    mpz_tdiv_q(truncated.get_mpz_t(), value.raw().get_num_mpz_t(), value.raw().get_den_mpz_t());
    report.counterexamples.push_back({std::move(parameters), value, Rational(truncated)});
  }
}

}  // namespace

Rational chi_orbifold(unsigned g, unsigned s) {
  require_xi_domain(g, s);
  require_odd(g, "chi_orbifold");
  return signed_puncture_factorial(g, s) * bernoulli_number(g + 1) /
         Rational(Integer(g + 1) * factorial(g - 1));
}

Rational xi_even(unsigned q, unsigned g, unsigned s) {
  require_xi_domain(g, s);
  require_q(q);
  if (g % 2 == 1) {
    throw PreconditionError("xi_even is defined for even g only, got g=" + std::to_string(g));
  }
  const Rational q_term = pow(Rational(q), static_cast<int>(g)) - Rational(q);
  return signed_puncture_factorial(g, s) / Rational(factorial(g) * 2) * q_term * bernoulli_number(g);
}

Rational xi_odd(unsigned q, unsigned g, unsigned s) {
  require_xi_domain(g, s);
  require_q(q);
  require_odd(g, "xi_odd");
  const Rational correction = signed_puncture_factorial(g, s) / Rational(factorial(g)) *
                              pow(Rational(q), static_cast<int>(g) - 1) * weighted_bernoulli_sum(g, q);
  return chi_orbifold(g, s) + correction;
}

Rational xi_ghj_polynomial(unsigned q, unsigned g, unsigned s) {
  require_xi_domain(g, s);
  require_q(q);
  require_odd(g, "xi_ghj_polynomial");
  const Rational qr(q);
  const Rational bracket =
      Rational(g + 1) * bernoulli_number(g) * pow(qr, static_cast<int>(g)) + bernoulli_convolution(g + 1, qr, 0);
  return -signed_puncture_factorial(g, s) / Rational(factorial(g + 1)) * bracket;
}

XiRecord xi_closed(unsigned q, unsigned g, unsigned s) {
  require_xi_domain(g, s);
  const Rational value = g % 2 == 0 ? xi_even(q, g, s) : xi_odd(q, g, s);
  return XiRecord{g, s, q, value, XiPath::closed_form};
}

Rational bernoulli_convolution(unsigned n, const Rational& q, unsigned start) {
  Rational sum;
  for (unsigned r = start; r <= n; ++r) {
    sum += Rational(binomial(n, r)) * bernoulli_number(n - r) * bernoulli_number(r) * pow(q, static_cast<int>(r));
  }
  return sum;
}

Rational even_bernoulli_convolution(unsigned n, const Rational& q, unsigned start) {
  Rational sum;
  for (unsigned r = start; 2 * r <= n; ++r) {
    sum += Rational(binomial(n, 2 * r)) * bernoulli_number(n - 2 * r) * bernoulli_number(2 * r) *
           pow(q, static_cast<int>(2 * r));
  }
  return sum;
}

Rational integrality_composite(unsigned g, unsigned q) {
  require_odd(g, "integrality composite");
  require_q(q);
  const Rational qr(q);
  Rational weighted;
  for (unsigned i = 1; 2 * i + 1 <= q; ++i) {
    weighted += Rational(i) * bernoulli_polynomial(g, Rational(Integer(i), Integer(q)));
  }
  const Rational tail =
      bernoulli_number(g + 1) + bernoulli_convolution(g + 1, qr, 1) / Rational(g + 1);
  return Rational(2) * pow(qr, static_cast<int>(g) - 1) * weighted - tail;
}

std::string_view to_string(Identity identity) {
  switch (identity) {
    case Identity::p21:
      return "p21";
    case Identity::p22:
      return "p22";
    case Identity::identity1:
      return "identity1";
    case Identity::identity2:
      return "identity2";
    case Identity::am_integrality:
      return "am";
    case Identity::p20_equality:
      return "p20";
  }
  return "unknown";
}

Identity parse_identity(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Identity>, 7> kNames{{
      {"p21", Identity::p21},
      {"p22", Identity::p22},
      {"identity1", Identity::identity1},
      {"identity2", Identity::identity2},
      {"am", Identity::am_integrality},
      {"am_integrality", Identity::am_integrality},
      {"p20", Identity::p20_equality},
  }};
  for (const auto& [key, value] : kNames) {
    if (key == name) {
      return value;
    }
  }
  throw PreconditionError("unknown identity: " + std::string(name));
}

IdentityReport check_identity(Identity identity, const IdentityRange& range) {
  if (range.g_max > 15 || range.q_max > 12) {
    throw PreconditionError("identity sweeps are bounded by g <= 15 and q <= 12");
  }
  IdentityReport report;
  report.identity = identity;
  const unsigned start = range.convolution_start;

  switch (identity) {
    case Identity::p21: {
      const unsigned q_lo = std::max(range.q_min, 1u);
      report.parameter_range = "g=1 q=" + std::to_string(q_lo) + ".." + std::to_string(range.q_max);
      for (unsigned q = q_lo; q <= range.q_max; ++q) {
        const Rational qr(q);
        const Rational rhs = -(qr * qr / Rational(12) - qr / Rational(4) + Rational(Integer(1), Integer(6)));
        record(report, params({{"q", q}}), weighted_bernoulli_sum(1, q), rhs);
      }
      break;
    }
    case Identity::p22: {
      const unsigned g_lo = first_odd_at_least(std::max(range.g_min, 3u));
      const unsigned q_lo = std::max(range.q_min, 2u);
      report.parameter_range = range_text("g", g_lo, range.g_max, q_lo, range.q_max) + " (odd g)";
      for (unsigned g = g_lo; g <= range.g_max; g += 2) {
        for (unsigned q = q_lo; q <= range.q_max; ++q) {
          const Rational qr(q);
          const Rational rhs = -pow(qr, 1 - static_cast<int>(g)) *
                               (bernoulli_number(g + 1) + bernoulli_convolution(g + 1, qr, 1) / Rational(g + 1));
          record(report, params({{"g", g}, {"q", q}}), weighted_bernoulli_sum(g, q), rhs);
        }
      }
      break;
    }
    case Identity::identity1: {
      const unsigned g_lo = std::max(range.g_min, 2u);
      const unsigned q_lo = std::max(range.q_min, 1u);
      report.parameter_range = range_text("g", g_lo, range.g_max, q_lo, range.q_max) +
                               " r_start=" + std::to_string(start);
      for (unsigned g = g_lo; g <= range.g_max; ++g) {
        for (unsigned q = q_lo; q <= range.q_max; ++q) {
          const Rational qr(q);
          const Rational full = bernoulli_convolution(2 * g, qr, start);
          const Rational even = even_bernoulli_convolution(2 * g, qr, start);
          const Rational rhs = Rational(1 - 2 * static_cast<long>(g)) * bernoulli_number(2 * g) -
                               Rational(2 * g) * pow(qr, static_cast<int>(2 * g) - 2) *
                                   weighted_bernoulli_sum(2 * g - 1, q);
          record(report, params({{"g", g}, {"q", q}, {"form", 1}}), full, rhs);
          record(report, params({{"g", g}, {"q", q}, {"form", 2}}), even, rhs);
        }
      }
      break;
    }
    case Identity::identity2: {
      const unsigned g_lo = std::max(range.g_min, 2u);
      report.parameter_range = "g=" + std::to_string(g_lo) + ".." + std::to_string(range.g_max) +
                               " q=2 r_start=" + std::to_string(start);
      for (unsigned g = g_lo; g <= range.g_max; ++g) {
        const Rational rhs = Rational(1 - 2 * static_cast<long>(g)) * bernoulli_number(2 * g);
        record(report, params({{"g", g}, {"form", 1}}), even_bernoulli_convolution(2 * g, Rational(1), start), rhs);
        record(report, params({{"g", g}, {"form", 2}}), even_bernoulli_convolution(2 * g, Rational(2), start), rhs);
      }
      break;
    }
    case Identity::am_integrality: {
      const unsigned g_lo = first_odd_at_least(std::max(range.g_min, 3u));
      const unsigned q_lo = std::max(range.q_min, 1u);
      report.parameter_range = range_text("g", g_lo, range.g_max, q_lo, range.q_max) + " (odd g) i=0..q";
      for (unsigned g = g_lo; g <= range.g_max; g += 2) {
        for (unsigned q = q_lo; q <= range.q_max; ++q) {
          const Rational scale = pow(Rational(q), static_cast<int>(g));
          for (unsigned i = 0; i <= q; ++i) {
            record_integer(report, params({{"g", g}, {"q", q}, {"i", i}}),
                           scale * bernoulli_polynomial(g, Rational(Integer(i), Integer(q))));
          }
          record_integer(report, params({{"g", g}, {"q", q}, {"composite", 1}}), integrality_composite(g, q));
        }
      }
      break;
    }
    case Identity::p20_equality: {
      const unsigned g_lo = first_odd_at_least(std::max(range.g_min, 1u));
      const unsigned q_lo = std::max(range.q_min, 1u);
      report.parameter_range = range_text("g", g_lo, range.g_max, q_lo, range.q_max) +
                               " (odd g) s=0.." + std::to_string(range.s_max);
      for (unsigned q = q_lo; q <= range.q_max; ++q) {
        for (unsigned g = g_lo; g <= range.g_max; g += 2) {
          for (unsigned s = 0; s <= range.s_max; ++s) {
            if (g + s < 2) {
              continue;
            }
            record(report, params({{"q", q}, {"g", g}, {"s", s}}), xi_odd(q, g, s), xi_ghj_polynomial(q, g, s));
          }
        }
      }
      break;
    }
  }
  return report;
}

}  // namespace moduli_euler
