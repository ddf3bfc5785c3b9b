#include "moduli_euler/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "moduli_euler/closed_forms.hpp"
#include "moduli_euler/continuum.hpp"
#include "moduli_euler/errors.hpp"
#include "moduli_euler/ghj_model.hpp"

namespace moduli_euler::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string command;
  Json params = Json::object();
  std::vector<std::string> columns;
  std::vector<Json> rows;
  std::optional<bool> pass;
};

std::string csv_cell(const Json& value) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else {
    text = value.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + "\"";
}

void emit(std::ostream& out, const std::string& format, const Output& output, std::optional<long long> elapsed_ms) {
  if (format == "csv") {
    for (std::size_t i = 0; i < output.columns.size(); ++i) {
      out << (i ? "," : "") << output.columns[i];
    }
    out << "\n";
    for (const auto& row : output.rows) {
      for (std::size_t i = 0; i < output.columns.size(); ++i) {
        out << (i ? "," : "") << csv_cell(row.at(output.columns[i]));
      }
      out << "\n";
    }
    return;
  }
  Json doc;
  doc["command"] = output.command;
  doc["params"] = output.params;
  doc["results"] = Json::array();
  for (const auto& row : output.rows) {
    doc["results"].push_back(row);
  }
  if (output.pass) {
    doc["pass"] = *output.pass;
  }
  if (elapsed_ms) {
    doc["elapsed_ms"] = *elapsed_ms;
  }
  out << doc.dump(2) << "\n";
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(text, &used);
    if (used != text.size() || text.empty() || text[0] == '-') {
      throw std::invalid_argument(text);
    }
    return static_cast<unsigned>(value);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected a nonnegative integer, got '" + text + "'");
  }
}

// key=value defaults; '#' starts a comment.
std::map<std::string, unsigned> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read config file " + path);
  }
  std::map<std::string, unsigned> values;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line without '=': " + line);
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (key != "order" && key != "genus-max") {
      throw UsageError("unknown config key '" + key + "' (expected order or genus-max)");
    }
    values[key] = parse_unsigned(trim(line.substr(eq + 1)), "config " + key);
  }
  return values;
}

struct Defaults {
  std::optional<unsigned> order;
  std::optional<unsigned> genus_max;
};

// --flag > config file > environment > per-command automatic value.
Defaults resolve_defaults(const std::string& config_path) {
  Defaults d;
  if (const char* env = std::getenv(kOrderEnvVar); env != nullptr && *env != '\0') {
    d.order = parse_unsigned(env, kOrderEnvVar);
  }
  if (!config_path.empty()) {
    const auto values = read_config(config_path);
    if (auto it = values.find("order"); it != values.end()) {
      d.order = it->second;
    }
    if (auto it = values.find("genus-max"); it != values.end()) {
      d.genus_max = it->second;
    }
  }
  return d;
}

unsigned pick_order(const std::optional<unsigned>& flag, const Defaults& defaults, unsigned automatic) {
  if (flag) {
    return *flag;
  }
  return defaults.order.value_or(automatic);
}

Json xi_row(unsigned q, unsigned g, unsigned s) {
  Json row;
  row["q"] = q;
  row["g"] = g;
  row["s"] = s;
  return row;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact parametrized Euler characteristics of the Goulden-Harer-Jackson matrix model",
               "moduli-euler"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string config_path;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", config_path, "key=value file with defaults (order, genus-max)");
  app.add_flag("--timing", timing, "Report elapsed_ms (makes output time dependent)");

  unsigned q = 1;
  unsigned g = 1;
  unsigned s = 1;
  std::optional<unsigned> order;
  std::string method = "closed";

  auto* xi = app.add_subcommand("xi", "Compute xi^s_g(1/q)");
  xi->add_option("--q", q)->required();
  xi->add_option("--g", g)->required();
  xi->add_option("--s", s)->required();
  xi->add_option("--method", method)->check(CLI::IsMember({"extract", "closed", "both"}));
  xi->add_option("--order", order, "Truncation order in t");

  unsigned g_max = 1;
  unsigned s_max = 1;
  unsigned s_min = 0;
  auto* table = app.add_subcommand("table", "Grid of xi by both methods");
  table->add_option("--q", q)->required();
  table->add_option("--g-max", g_max)->required();
  table->add_option("--s-max", s_max)->required();
  table->add_option("--s-min", s_min);
  table->add_option("--order", order, "Truncation order in t");

  auto* chi = app.add_subcommand("chi", "Orbifold Euler characteristic of M_g^s (odd g)");
  chi->add_option("--g", g)->required();
  chi->add_option("--s", s)->required();

  std::string identity_name;
  unsigned q_max = 8;
  unsigned q_min = 1;
  unsigned g_min = 1;
  std::optional<unsigned> verify_g_max;
  unsigned verify_s_max = 5;
  unsigned r_start = 0;
  auto* verify = app.add_subcommand("verify", "Exhaustive identity sweep");
  verify->add_option("--identity", identity_name)
      ->required()
      ->check(CLI::IsMember({"p8", "p20", "p21", "p22", "identity1", "identity2", "am"}));
  verify->add_option("--q-max", q_max);
  verify->add_option("--q-min", q_min);
  verify->add_option("--g-max", verify_g_max, "Largest g (largest K for p8)");
  verify->add_option("--g-min", g_min);
  verify->add_option("--s-max", verify_s_max, "Largest s (p20)");
  verify->add_option("--r-start", r_start, "First index of the Bernoulli convolution (identity1/identity2)");

  std::string sector_name;
  std::optional<unsigned> genus_max;
  auto* continuum = app.add_subcommand("continuum", "Double-scaling-limit free energy terms");
  continuum->add_option("--q", q)->required();
  continuum->add_option("--sector", sector_name)->required()->check(CLI::IsMember({"even", "odd"}));
  continuum->add_option("--genus-max", genus_max);

  unsigned matrix_size = 1;
  auto* oracle = app.add_subcommand("oracle", "Formal-N vs concrete-N free energy check");
  oracle->add_option("--q", q)->required();
  oracle->add_option("--n", matrix_size)->required();
  oracle->add_option("--order", order, "Truncation order in t");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Output output;
  try {
    const Defaults defaults = resolve_defaults(config_path);

    if (xi->parsed()) {
      require_xi_domain(g, s);
      output.command = "xi";
      const unsigned t_order = pick_order(order, defaults, g + s);
      output.params = {{"q", q}, {"g", g}, {"s", s}, {"method", method}};
      if (method != "closed") {
        output.params["order"] = t_order;
      }
      Json row = xi_row(q, g, s);
      std::optional<Rational> extracted;
      std::optional<Rational> closed;
      if (method != "closed") {
        extracted = xi_by_extraction(q, g, s, t_order).value;
        row["xi_extract"] = extracted->to_string();
      }
      if (method != "extract") {
        closed = xi_closed(q, g, s).value;
        row["xi_closed"] = closed->to_string();
      }
      output.columns = {"q", "g", "s"};
      if (extracted) {
        output.columns.push_back("xi_extract");
      }
      if (closed) {
        output.columns.push_back("xi_closed");
      }
      if (extracted && closed) {
        row["agree"] = *extracted == *closed;
        output.columns.push_back("agree");
        output.pass = *extracted == *closed;
      }
      output.rows.push_back(row);
    } else if (table->parsed()) {
      if (g_max == 0) {
        throw PreconditionError("--g-max must be >= 1");
      }
      output.command = "table";
      const unsigned t_order = pick_order(order, defaults, g_max + s_max);
      output.params = {{"q", q}, {"g_max", g_max}, {"s_min", s_min}, {"s_max", s_max}, {"order", t_order}};
      output.columns = {"q", "g", "s", "xi_extract", "xi_closed", "agree"};
      const BivariateSeries free_energy = free_energy_formal(ModelParams{q, t_order, std::nullopt});
      bool all_agree = true;
      for (unsigned gg = 1; gg <= g_max; ++gg) {
        for (unsigned ss = s_min; ss <= s_max; ++ss) {
          if (gg + ss < 2) {
            continue;
          }
          const Rational extracted = xi_by_extraction(free_energy, q, gg, ss).value;
          const Rational closed = xi_closed(q, gg, ss).value;
          Json row = xi_row(q, gg, ss);
          row["xi_extract"] = extracted.to_string();
          row["xi_closed"] = closed.to_string();
          row["agree"] = extracted == closed;
          all_agree = all_agree && extracted == closed;
          output.rows.push_back(row);
        }
      }
      output.pass = all_agree;
    } else if (chi->parsed()) {
      output.command = "chi";
      output.params = {{"g", g}, {"s", s}};
      output.columns = {"g", "s", "chi"};
      Json row;
      row["g"] = g;
      row["s"] = s;
      row["chi"] = chi_orbifold(g, s).to_string();
      output.rows.push_back(row);
    } else if (verify->parsed()) {
      output.command = "verify";
      const unsigned gm = verify_g_max.value_or(defaults.genus_max.value_or(kDefaultGenusMax));
      output.columns = {"parameters", "lhs", "rhs"};
      if (identity_name == "p8") {
        const unsigned q_lo = std::max(q_min, 2u);
        const unsigned k_lo = std::max(g_min, 1u);
        std::size_t cases = 0;
        for (unsigned qq = q_lo; qq <= q_max; ++qq) {
          for (unsigned k = k_lo; k <= gm; ++k) {
            ++cases;
            const ProductIdentitySides sides = product_identity_sides(qq, k);
            if (!sides.holds()) {
              Json row;
              row["parameters"] = "q=" + std::to_string(qq) + " K=" + std::to_string(k);
              row["lhs"] = sides.lhs.to_string('t') +
                           (sides.lhs_remainder.is_zero() ? "" : " rem " + sides.lhs_remainder.to_string('t'));
              row["rhs"] = sides.rhs.to_string('t');
              output.rows.push_back(row);
            }
          }
        }
        output.params = {{"identity", "p8"},
                         {"range", "q=" + std::to_string(q_lo) + ".." + std::to_string(q_max) + " K=" +
                                       std::to_string(k_lo) + ".." + std::to_string(gm)},
                         {"cases", cases}};
      } else {
        IdentityRange range;
        range.q_min = q_min;
        range.q_max = q_max;
        range.g_min = g_min;
        range.g_max = gm;
        range.s_max = verify_s_max;
        range.convolution_start = r_start;
        const IdentityReport report = check_identity(parse_identity(identity_name), range);
        for (const auto& c : report.counterexamples) {
          Json row;
          row["parameters"] = c.parameters;
          row["lhs"] = c.lhs.to_string();
          row["rhs"] = c.rhs.to_string();
          output.rows.push_back(row);
        }
        output.params = {{"identity", std::string(to_string(report.identity))},
                         {"range", report.parameter_range},
                         {"cases", report.cases_checked}};
      }
      output.pass = output.rows.empty();
      if (!output.rows.empty()) {
        err << output.rows.size() << " counterexample(s) found\n";
      }
    } else if (continuum->parsed()) {
      output.command = "continuum";
      const Sector sector = parse_sector(sector_name);
      const unsigned gm = genus_max.value_or(defaults.genus_max.value_or(kDefaultGenusMax));
      const ContinuumExpansion expansion =
          sector == Sector::even_genus ? even_sector_expansion(q, gm) : odd_sector_expansion(q, gm);
      output.params = {{"q", q}, {"sector", std::string(to_string(sector))}, {"genus_max", gm}};
      output.columns = {"term", "mu_power", "log_mu", "coefficient", "penner_part", "deformation_part"};
      for (const auto& term : expansion.terms) {
        Json row;
        row["term"] = term.label();
        row["mu_power"] = term.mu_power;
        row["log_mu"] = term.log_mu;
        row["coefficient"] = term.coefficient.to_string();
        row["penner_part"] = term.penner_part.to_string();
        row["deformation_part"] = term.deformation_part.to_string();
        output.rows.push_back(row);
      }
    } else if (oracle->parsed()) {
      output.command = "oracle";
      const unsigned t_order = pick_order(order, defaults, kDefaultOrder);
      const ModelParams params{q, t_order, matrix_size};
      params.validate();
      output.params = {{"q", q}, {"n", matrix_size}, {"order", t_order}};
      output.columns = {"t_degree", "formal", "concrete", "agree"};
      const UnivariateSeries formal = free_energy_formal_parts(params).product().specialize(Rational(matrix_size));
      const UnivariateSeries concrete = free_energy_concrete(params);
      bool all_agree = true;
      for (unsigned m = 1; m <= t_order; ++m) {
        Json row;
        row["t_degree"] = m;
        row["formal"] = formal.coefficient(m).to_string();
        row["concrete"] = concrete.coefficient(m).to_string();
        row["agree"] = formal.coefficient(m) == concrete.coefficient(m);
        all_agree = all_agree && formal.coefficient(m) == concrete.coefficient(m);
        output.rows.push_back(row);
      }
      output.pass = all_agree;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }

  std::optional<long long> elapsed;
  if (timing) {
    elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  emit(out, format, output, elapsed);
  return output.pass.value_or(true) ? kExitOk : kExitCounterexample;
}

}  // namespace moduli_euler::cli
