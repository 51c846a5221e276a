#include "hb/casestudy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace hb {

namespace {

constexpr double kExcludedArc = 1e-6;

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double relative_deviation(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

LevelCircle::LevelCircle(double level) : t(level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("LevelCircle: level must lie in (0, 1)");
  }
  s = -std::log(t);
  radius = 1.0 / (1.0 + s);
  center = 1.0 - radius;
}

BoundaryDistances LevelCircle::distances(double psi) const {
  const double half_sin = std::sin(0.5 * psi);
  const double u = 2.0 * radius * half_sin * half_sin;
  const double v = radius * std::sin(psi);
  return BoundaryDistances::shifted(u, v);
}

complex LevelCircle::point(double psi) const {
  const double half_sin = std::sin(0.5 * psi);
  return {1.0 - 2.0 * radius * half_sin * half_sin, radius * std::sin(psi)};
}

Density mu_density(double c, bool with_theta) {
  if (!(c > 0.0)) throw std::invalid_argument("mu_density: c must be positive");
  return symbol_density(Symbol::phi_c(c, with_theta), unit_weight());
}

double levelset_identity_check(double c, double t, int samples) {
  if (samples < 1) throw std::invalid_argument("levelset_identity_check: need samples >= 1");
  const LevelCircle circle(t);
  const double lo = 0.5 * kExcludedArc;
  const double span = 2.0 * std::numbers::pi - kExcludedArc;
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double psi = lo + span * (static_cast<double>(j) + 0.5) / static_cast<double>(samples);
    const BoundaryDistances d = circle.distances(psi);
    worst = std::max(worst, relative_deviation(theta_modulus_sq(d), circle.t));
    worst = std::max(worst, relative_deviation(d.dist_to_one_sq, d.one_minus_abs_sq / circle.s));
    const double lhs = std::sqrt(theta_modulus_sq(d) * phi_c_modulus_sq(c, d));
    const double rhs =
        std::sqrt(circle.t * std::pow(circle.s, c)) / std::pow(d.one_minus_abs_sq, 0.5 * c);
    worst = std::max(worst, relative_deviation(lhs, rhs));
  }
  return worst;
}

std::string to_string(GrowthTrend g) {
  switch (g) {
    case GrowthTrend::vanishing: return "vanishing";
    case GrowthTrend::constant: return "constant";
    case GrowthTrend::divergent: return "divergent";
  }
  return "?";
}

MultiplierGrowth multiplier_growth_check(double c, bool with_theta, double margin) {
  if (!(c > 0.0)) throw std::invalid_argument("multiplier_growth_check: c must be positive");
  MultiplierGrowth result{c, with_theta, {}, GrowthTrend::constant};
  bool all_up = true, all_down = true;
  for (int level = 1; level <= 3; ++level) {
    const LevelCircle circle(std::exp(-static_cast<double>(level)));
    GrowthCurve curve{circle.t, {}, 0.0, 0.0};
    std::vector<double> xs, ys;
    for (int j = 1; j <= 20; ++j) {
      const double psi = std::ldexp(1.0, -j);
      const BoundaryDistances d = circle.distances(psi);
      const double abs_z = std::sqrt(1.0 - d.one_minus_abs_sq);
      const double y = d.one_minus_abs_sq / (1.0 + abs_z);
      double mod_sq = phi_c_modulus_sq(c, d);
      if (with_theta) mod_sq *= theta_modulus_sq(d);
      const double g = std::sqrt(y * mod_sq);
      curve.samples.push_back({psi, y, g});
      curve.sup = std::max(curve.sup, g);
      xs.push_back(-std::log(y));
      ys.push_back(std::log(g));
    }
    curve.slope = fit_slope(xs, ys);
    all_up = all_up && curve.slope >= margin;
    all_down = all_down && curve.slope <= -margin;
    result.curves.push_back(std::move(curve));
  }
  if (all_up) {
    result.trend = GrowthTrend::divergent;
  } else if (all_down) {
    result.trend = GrowthTrend::vanishing;
  }
  return result;
}

bool Experiment::flagged() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ExperimentEntry& e) { return e.report.flagged(); });
}

Experiment run_experiment(const std::vector<double>& c_values, bool with_theta,
                          const ProfileOptions& opts) {
  Experiment e;
  for (double c : c_values) {
    CarlesonReport report = level_profile(mu_density(c, with_theta), true, opts);
    const Containment verdict = containment_from(report.classification);
    e.entries.push_back({c, with_theta, std::move(report), verdict});
  }
  return e;
}

void write_experiment_csv(std::ostream& os, const Experiment& e) {
  const auto old_precision = os.precision(17);
  os << "c,with_theta,n,max_ratio,slope,verdict\n";
  for (const auto& entry : e.entries) {
    for (const auto& row : entry.report.rows) {
      os << entry.c << ',' << (entry.with_theta ? 1 : 0) << ',' << row.level << ','
         << row.ratio << ',' << entry.report.slope << ',' << to_string(entry.verdict) << '\n';
    }
  }
  os.precision(old_precision);
}

nlohmann::json to_json(const Experiment& e) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& entry : e.entries) {
    entries.push_back({{"c", entry.c},
                       {"with_theta", entry.with_theta},
                       {"verdict", to_string(entry.verdict)},
                       {"report", to_json(entry.report)}});
  }
  return {{"experiments", entries}, {"flagged", e.flagged()}};
}

nlohmann::json to_json(const MultiplierGrowth& g) {
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& curve : g.curves) {
    curves.push_back({{"t", curve.t}, {"slope", curve.slope}, {"sup", curve.sup}});
  }
  return {{"c", g.c}, {"with_theta", g.with_theta}, {"trend", to_string(g.trend)},
          {"curves", curves}};
}

}  // namespace hb
