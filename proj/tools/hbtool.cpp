// hbtool: command-line front end for the H(b) toolkit.
//
// Machine-readable output (CSV or JSON) goes to stdout, a short human summary
// to stderr. Every report carries the full run configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hb/boundary.hpp"
#include "hb/carleson.hpp"
#include "hb/casestudy.hpp"
#include "hb/hardy.hpp"
#include "hb/selftest.hpp"
#include "hb/series.hpp"
#include "hb/symbol.hpp"
#include "hb/toeplitz.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  std::string subcommand;
  std::optional<double> phi_c;
  bool theta = false;
  std::string coeff_file;
  std::size_t order = 16;
  std::size_t grid = std::size_t{1} << 14;
  int n_min = 6;
  int n_max = 14;
  std::string format = "csv";
  std::uint64_t seed = 20240917;
  double tolerance_scale = 1.0;

  // hbnorm
  std::string poly_file;
  std::optional<std::size_t> monomial;
  std::optional<std::size_t> sweep;

  // containment
  std::string kind = "hp";
  std::string p = "4";
  double gevrey_c = 1.0;

  // casestudy
  std::vector<double> c_values;
  std::string theta_mode = "both";
};

json config_json(const RunConfig& cfg) {
  json j{{"subcommand", cfg.subcommand},
         {"phi_c", cfg.phi_c ? json(*cfg.phi_c) : json(nullptr)},
         {"theta", cfg.theta},
         {"coeff_file", cfg.coeff_file},
         {"order", cfg.order},
         {"grid", cfg.grid},
         {"levels", std::to_string(cfg.n_min) + ":" + std::to_string(cfg.n_max)},
         {"format", cfg.format},
         {"seed", cfg.seed},
         {"tolerance_scale", cfg.tolerance_scale}};
  if (cfg.subcommand == "hbnorm") {
    j["poly_file"] = cfg.poly_file;
    j["monomial"] = cfg.monomial ? json(*cfg.monomial) : json(nullptr);
    j["sweep"] = cfg.sweep ? json(*cfg.sweep) : json(nullptr);
  } else if (cfg.subcommand == "containment") {
    j["kind"] = cfg.kind;
    j["p"] = cfg.p;
    j["gevrey_c"] = cfg.gevrey_c;
  } else if (cfg.subcommand == "casestudy") {
    j["c_values"] = cfg.c_values;
    j["theta_mode"] = cfg.theta_mode;
  }
  return j;
}

/// CSV outputs open with the configuration as "# key=value" comment lines.
void csv_header(std::ostream& os, const RunConfig& cfg) {
  const json config = config_json(cfg);
  for (const auto& [key, value] : config.items()) {
    os << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump())
       << '\n';
  }
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plain text, one coefficient per line as "re im"; blank lines and lines
/// starting with '#' are skipped.
hb::PowerSeries read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open coefficient file '" + path + "'");
  std::vector<hb::complex> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    std::string rest;
    if (!(row >> re >> im) || (row >> rest)) {
      throw UsageError("malformed coefficient line '" + line + "' (expected 're im')");
    }
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) throw UsageError("coefficient file '" + path + "' is empty");
  return hb::PowerSeries(std::move(coeffs));
}

hb::Symbol make_symbol(const RunConfig& cfg) {
  const int given = (cfg.phi_c ? 1 : 0) + (cfg.coeff_file.empty() ? 0 : 1);
  if (!cfg.coeff_file.empty() && (cfg.theta || cfg.phi_c)) {
    throw UsageError("--coeff-file cannot be combined with --phi-c or --theta");
  }
  if (given == 0 && !cfg.theta) {
    throw UsageError("a symbol is required: --phi-c C, --theta, or --coeff-file FILE");
  }
  if (!cfg.coeff_file.empty()) return hb::Symbol::polynomial(read_coefficients(cfg.coeff_file));
  if (cfg.phi_c) {
    if (!(*cfg.phi_c > 0.0)) throw UsageError("--phi-c must be positive");
    return hb::Symbol::phi_c(*cfg.phi_c, cfg.theta);
  }
  return hb::Symbol::theta();
}

int cmd_coeffs(const RunConfig& cfg) {
  const hb::Symbol phi = make_symbol(cfg);
  const hb::PowerSeries s = phi.series(cfg.order);
  if (cfg.format == "json") {
    json coeffs = json::array();
    for (std::size_t k = 0; k <= s.order(); ++k) coeffs.push_back({s[k].real(), s[k].imag()});
    std::cout << json{{"config", config_json(cfg)}, {"symbol", phi.describe()}, {"coefficients", coeffs}}
                     .dump(2)
              << '\n';
  } else {
    csv_header(std::cout, cfg);
    std::cout.precision(17);
    std::cout << "k,re,im\n";
    for (std::size_t k = 0; k <= s.order(); ++k) {
      std::cout << k << ',' << s[k].real() << ',' << s[k].imag() << '\n';
    }
  }
  std::cerr << phi.describe() << ": " << s.order() + 1 << " coefficients\n";
  return 0;
}

int cmd_hbnorm(const RunConfig& cfg) {
  const hb::Symbol phi = make_symbol(cfg);
  const int given = (cfg.poly_file.empty() ? 0 : 1) + (cfg.monomial ? 1 : 0) + (cfg.sweep ? 1 : 0);
  if (given != 1) throw UsageError("hbnorm needs exactly one of --poly-file, --monomial, --sweep");

  struct Row {
    std::size_t n;
    double norm_sq;
    std::optional<double> monomial_formula;
  };
  std::vector<Row> rows;
  std::string label;
  if (!cfg.poly_file.empty()) {
    const hb::PowerSeries p = read_coefficients(cfg.poly_file);
    const hb::PowerSeries s = phi.series(std::max(cfg.order, p.order()));
    rows.push_back({p.degree(), hb::hb_norm_sq(s, p), std::nullopt});
    label = "polynomial from " + cfg.poly_file;
  } else {
    const std::size_t lo = cfg.monomial ? *cfg.monomial : 0;
    const std::size_t hi = cfg.monomial ? *cfg.monomial : *cfg.sweep;
    const hb::PowerSeries s = phi.series(std::max(cfg.order, hi));
    for (std::size_t n = lo; n <= hi; ++n) {
      rows.push_back({n, hb::hb_norm_sq(s, hb::PowerSeries::monomial(n)),
                      hb::monomial_hb_norm_sq(s, n)});
    }
    label = cfg.monomial ? "z^" + std::to_string(lo) : "z^n, n <= " + std::to_string(hi);
  }

  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      json row{{"n", r.n}, {"hb_norm_sq", r.norm_sq}};
      if (r.monomial_formula) row["monomial_formula"] = *r.monomial_formula;
      out.push_back(row);
    }
    std::cout << json{{"config", config_json(cfg)}, {"symbol", phi.describe()}, {"rows", out}}.dump(2)
              << '\n';
  } else {
    csv_header(std::cout, cfg);
    std::cout.precision(17);
    std::cout << (cfg.poly_file.empty() ? "n,hb_norm_sq,monomial_formula\n" : "degree,hb_norm_sq\n");
    for (const auto& r : rows) {
      std::cout << r.n << ',' << r.norm_sq;
      if (r.monomial_formula) std::cout << ',' << *r.monomial_formula;
      std::cout << '\n';
    }
  }
  std::cerr << "||p||^2_H(b) for " << label << " with " << phi.describe() << ": "
            << rows.front().norm_sq << (rows.size() > 1 ? " (first row)" : "") << '\n';
  return 0;
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return hb::kInfinity;
  try {
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used != text.size()) throw UsageError("bad --p value '" + text + "'");
    return p;
  } catch (const std::logic_error&) {
    throw UsageError("bad --p value '" + text + "'");
  }
}

hb::ProfileOptions profile_options(const RunConfig& cfg) {
  hb::ProfileOptions opts;
  opts.n_min = cfg.n_min;
  opts.n_max = cfg.n_max;
  return opts;
}

int cmd_containment(const RunConfig& cfg) {
  const hb::Symbol phi = make_symbol(cfg);
  if (cfg.kind == "hp") {
    const double p = parse_exponent(cfg.p);
    hb::HpContainment result;
    try {
      result = hb::containment_hp(phi, p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (cfg.format == "json") {
      std::cout << json{{"config", config_json(cfg)}, {"symbol", phi.describe()}, {"result", to_json(result)}}
                       .dump(2)
                << '\n';
    } else {
      csv_header(std::cout, cfg);
      std::cout.precision(17);
      std::cout << "r,grid,mean\n";
      for (const auto& e : result.evidence.evidence) {
        std::cout << e.radius << ',' << e.grid_size << ',' << e.mean << '\n';
      }
    }
    std::cerr << "H^" << cfg.p << " inside H(b) for " << phi.describe() << ": "
              << hb::to_string(result.verdict) << " (p~ = " << result.p_tilde
              << ", growth exponent " << result.evidence.growth_exponent << ")\n";
    return 0;
  }

  hb::RadialWeight weight;
  if (cfg.kind == "dirichlet") {
    weight = hb::unit_weight();
  } else if (cfg.kind == "gevrey") {
    if (!(cfg.gevrey_c > 0.0)) throw UsageError("--gevrey-c must be positive");
    weight = hb::gevrey_weight(cfg.gevrey_c);
  } else {
    throw UsageError("--kind must be hp, dirichlet or gevrey");
  }
  const hb::WeightedContainment result = hb::weighted_containment(phi, weight, profile_options(cfg));
  json out{{"config", config_json(cfg)},
           {"symbol", phi.describe()},
           {"containment", hb::to_string(result.containment)},
           {"report", to_json(result.report)}};
  if (cfg.kind == "gevrey") {
    const hb::Density d = hb::symbol_density(phi, weight);
    out["graded_sup"] = {hb::graded_sup(d, 0), hb::graded_sup(d, 1)};
  }
  if (cfg.format == "json") {
    std::cout << out.dump(2) << '\n';
  } else {
    csv_header(std::cout, cfg);
    hb::write_report_csv(std::cout, result.report);
  }
  std::cerr << cfg.kind << " containment for " << phi.describe() << ": "
            << hb::to_string(result.containment) << " (slope " << result.report.slope
            << ", levels " << cfg.n_min << ".." << cfg.n_max << ")"
            << (result.report.flagged() ? " [flagged quadrature]" : "") << '\n';
  return result.report.flagged() ? 1 : 0;
}

int cmd_casestudy(const RunConfig& cfg) {
  if (cfg.theta_mode != "both" && cfg.theta_mode != "with" && cfg.theta_mode != "without") {
    throw UsageError("--theta-mode must be both, with or without");
  }
  hb::Experiment all;
  auto run = [&](bool with_theta, std::vector<double> defaults) {
    const auto& cs = cfg.c_values.empty() ? defaults : cfg.c_values;
    hb::Experiment e = hb::run_experiment(cs, with_theta, profile_options(cfg));
    for (auto& entry : e.entries) all.entries.push_back(std::move(entry));
  };
  if (cfg.theta_mode != "with") run(false, {0.25, 0.5, 0.75});
  if (cfg.theta_mode != "without") run(true, {0.75, 1.0, 1.25});

  if (cfg.format == "json") {
    json out = to_json(all);
    out["config"] = config_json(cfg);
    json growth = json::array();
    for (const auto& entry : all.entries) {
      growth.push_back(to_json(hb::multiplier_growth_check(entry.c, entry.with_theta)));
    }
    out["multiplier_growth"] = growth;
    std::cout << out.dump(2) << '\n';
  } else {
    csv_header(std::cout, cfg);
    hb::write_experiment_csv(std::cout, all);
  }
  for (const auto& entry : all.entries) {
    std::cerr << "c=" << entry.c << (entry.with_theta ? " with theta" : " without theta") << ": "
              << hb::to_string(entry.verdict) << " (slope " << entry.report.slope << ")"
              << (entry.report.flagged() ? " [flagged]" : "") << '\n';
  }
  std::cerr << "verdicts describe the trend over levels " << cfg.n_min << ".." << cfg.n_max
            << " only\n";
  return all.flagged() ? 1 : 0;
}

int cmd_selftest(const RunConfig& cfg) {
  const auto results = hb::run_selftest({cfg.seed, cfg.tolerance_scale});
  if (cfg.format == "json") {
    json out = hb::to_json(results);
    out["config"] = config_json(cfg);
    std::cout << out.dump(2) << '\n';
  } else {
    csv_header(std::cout, cfg);
    std::cout.precision(6);
    std::cout << "suite,passed,worst,tolerance\n";
    for (const auto& r : results) {
      std::cout << r.name << ',' << (r.passed ? 1 : 0) << ',' << r.worst << ',';
      if (r.exact) {
        std::cout << "exact\n";
      } else {
        std::cout << r.tolerance << '\n';
      }
    }
  }
  for (const auto& r : results) {
    std::cerr << (r.passed ? "pass  " : "FAIL  ") << r.name << '\n';
  }
  return hb::all_passed(results) ? 0 : 1;
}

void add_symbol_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--phi-c", cfg.phi_c, "Symbol (1 - z)^{-c}");
  sub->add_flag("--theta", cfg.theta, "Multiply by theta (alone: theta itself)");
  sub->add_option("--coeff-file", cfg.coeff_file, "Polynomial symbol, one 're im' per line");
}

void add_common_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_level_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--levels", [&cfg](const std::vector<std::string>& v) {
       const auto colon = v.front().find(':');
       if (colon == std::string::npos) return false;
       try {
         cfg.n_min = std::stoi(v.front().substr(0, colon));
         cfg.n_max = std::stoi(v.front().substr(colon + 1));
       } catch (const std::logic_error&) {
         return false;
       }
       return cfg.n_min >= 1 && cfg.n_max > cfg.n_min && cfg.n_max <= 30;
     }, "Dyadic level range n_min:n_max (default 6:14)")
      ->type_name("LO:HI");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Numerical toolkit for non-extreme de Branges-Rovnyak spaces H(b)"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients of a symbol");
  add_symbol_flags(coeffs, cfg);
  add_common_flags(coeffs, cfg);
  coeffs->add_option("--order", cfg.order, "Highest coefficient index")->capture_default_str();

  auto* hbnorm = app.add_subcommand("hbnorm", "H(b) norms of polynomials");
  add_symbol_flags(hbnorm, cfg);
  add_common_flags(hbnorm, cfg);
  hbnorm->add_option("--order", cfg.order, "Minimum symbol series order")->capture_default_str();
  hbnorm->add_option("--poly-file", cfg.poly_file, "Polynomial, one 're im' per line");
  hbnorm->add_option("--monomial", cfg.monomial, "Norm of z^n");
  hbnorm->add_option("--sweep", cfg.sweep, "Norms of z^0 .. z^N");

  auto* containment = app.add_subcommand("containment", "Containment verdicts");
  add_symbol_flags(containment, cfg);
  add_common_flags(containment, cfg);
  add_level_flags(containment, cfg);
  containment->add_option("--kind", cfg.kind, "hp, dirichlet or gevrey")
      ->check(CLI::IsMember({"hp", "dirichlet", "gevrey"}))
      ->capture_default_str();
  containment->add_option("--p", cfg.p, "Exponent for --kind hp, >= 2 or 'inf'")
      ->capture_default_str();
  containment->add_option("--gevrey-c", cfg.gevrey_c, "c' in exp(-c'/(1 - r))")
      ->capture_default_str();
  containment->add_option("--grid", cfg.grid, "Boundary grid size (recorded only)")
      ->capture_default_str();

  auto* casestudy = app.add_subcommand("casestudy", "mu_c experiments with and without theta");
  add_common_flags(casestudy, cfg);
  add_level_flags(casestudy, cfg);
  casestudy->add_option("--c", cfg.c_values, "Exponents to test (default: the standard grids)");
  casestudy->add_option("--theta-mode", cfg.theta_mode, "both, with or without")
      ->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Invariant suites");
  add_common_flags(selftest, cfg);
  selftest->add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  selftest->add_option("--tolerance-scale", cfg.tolerance_scale,
                       "Multiplier on numerical tolerances")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "coeffs") return cmd_coeffs(cfg);
    if (cfg.subcommand == "hbnorm") return cmd_hbnorm(cfg);
    if (cfg.subcommand == "containment") return cmd_containment(cfg);
    if (cfg.subcommand == "casestudy") return cmd_casestudy(cfg);
    return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
