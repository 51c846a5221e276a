#include "hb/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "hb/boundary.hpp"
#include "hb/carleson.hpp"
#include "hb/casestudy.hpp"
#include "hb/hardy.hpp"
#include "hb/series.hpp"
#include "hb/toeplitz.hpp"

namespace hb {

namespace {

/// Coefficients uniform in the square [-1, 1]^2, scaled by decay^k.
PowerSeries random_series(std::mt19937_64& rng, std::size_t order, bool decaying) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PowerSeries f(order);
  for (std::size_t k = 0; k <= order; ++k) {
    const double scale = decaying ? 1.0 / static_cast<double>(k + 1) : 1.0;
    f[k] = scale * complex{u(rng), u(rng)};
  }
  return f;
}

double max_coeff_diff(const PowerSeries& f, const PowerSeries& g) {
  double worst = 0.0;
  const std::size_t n = std::max(f.order(), g.order());
  for (std::size_t k = 0; k <= n; ++k) {
    worst = std::max(worst, std::abs(f.coeff_or_zero(k) - g.coeff_or_zero(k)));
  }
  return worst;
}

SuiteResult numeric(std::string name, double worst, double tolerance, std::string detail = {}) {
  return {std::move(name), worst <= tolerance, false, worst, tolerance, std::move(detail)};
}

SuiteResult series_algebra(const SelftestConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries f = scale(random_series(rng, 32, true), 0.5);
    const PowerSeries g = scale(random_series(rng, 32, true), 0.5);
    worst = std::max(worst, max_coeff_diff(exp(add(f, g)), multiply(exp(f), exp(g))));
    worst = std::max(worst, max_coeff_diff(multiply(f, g), multiply(g, f)));
  }
  worst = std::max(worst, max_coeff_diff(multiply(phi_c_series(0.3, 64), phi_c_series(0.7, 64)),
                                         phi_c_series(1.0, 64)));
  return numeric("series-algebra", worst, 1e-12 * cfg.tolerance_scale);
}

SuiteResult toeplitz_homomorphism(const SelftestConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 1);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries phi = random_series(rng, 64, true);
    const PowerSeries psi = random_series(rng, 64, true);
    const PowerSeries p = random_series(rng, 64, false);
    worst = std::max(worst, homomorphism_residual(phi, psi, p));
  }
  return numeric("toeplitz-homomorphism", worst, 1e-12 * cfg.tolerance_scale);
}

SuiteResult monomial_norm() {
  const PowerSeries phi = phi_c_series(1.0, 256);
  std::size_t failures = 0;
  for (std::size_t n = 0; n <= 256; ++n) {
    const double expected = static_cast<double>(n) + 2.0;
    if (monomial_hb_norm_sq(phi, n) != expected) ++failures;
    if (hb_norm_sq(phi, PowerSeries::monomial(n)) != expected) ++failures;
  }
  SuiteResult r{"monomial-norm", failures == 0, true, static_cast<double>(failures), 0.0, {}};
  r.detail = "||z^n||^2 = n + 2 for phi_1, n <= 256";
  return r;
}

SuiteResult pythagorean(const SelftestConfig& cfg) {
  TripleOptions opts;
  opts.grid_size = 1024;
  opts.order = 128;
  opts.tolerance = kInfinity;
  double worst = 0.0;
  bool positive = true;
  for (const Symbol& phi : {Symbol::phi_c(0.25), Symbol::phi_c(0.5), Symbol::phi_c(1.0, true)}) {
    const SymbolTriple t = symbol_from_phi(phi, opts);
    worst = std::max(worst, t.max_residual);
    positive = positive && t.a_at_zero() > 0.0;
  }
  SuiteResult r = numeric("pythagorean", worst, 1e-8 * cfg.tolerance_scale, "M = 2^10");
  r.passed = r.passed && positive;
  return r;
}

SuiteResult level_set(const SelftestConfig& cfg) {
  double worst = 0.0;
  for (double c : {1.0, 2.0}) {
    for (int level = 1; level <= 3; ++level) {
      worst = std::max(worst, levelset_identity_check(c, std::exp(-static_cast<double>(level)), 100));
    }
  }
  bool tangent = true;
  for (int level = 1; level <= 3; ++level) {
    const LevelCircle circle(std::exp(-static_cast<double>(level)));
    tangent = tangent && circle.center + circle.radius == 1.0;
  }
  SuiteResult r = numeric("level-set", worst, 1e-12 * cfg.tolerance_scale);
  r.passed = r.passed && tangent;
  return r;
}

SuiteResult geometric_lemma(const SelftestConfig& cfg) {
  std::size_t outside = 0;
  double min_ratio = 1.0;
  for (int n : {4, 8}) {
    const GeometricLemmaResult g = geometric_lemma_check(n, 10000, cfg.seed);
    outside += g.samples - g.in_square_union - g.in_stolz;
    min_ratio = std::min(min_ratio, g.min_stolz_ratio);
  }
  std::ostringstream detail;
  detail << "min Stolz ratio " << min_ratio << " vs alpha " << kDyadicStolzAlpha;
  return {"geometric-lemma", outside == 0, false, static_cast<double>(outside), 0.0, detail.str()};
}

SuiteResult uniform_geometry(const SelftestConfig& cfg) {
  const Density one = uniform_density();
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const double h = std::ldexp(1.0, -n);
    const double expected = 2.0 * h * h - h * h * h;
    const double got = square_measure(one, DyadicSquare{n, 1}).value;
    worst = std::max(worst, std::abs(got - expected) / expected);
  }
  return numeric("uniform-geometry", worst, 1e-8 * cfg.tolerance_scale);
}

SuiteResult bergman_moments(const SelftestConfig& cfg) {
  double worst = 0.0;
  bool flagged = false;
  for (int n = 0; n <= 32; ++n) {
    const MomentEstimate m = moments(unit_weight(), n);
    flagged = flagged || m.flagged;
    worst = std::max(worst, std::abs(m.value - 1.0 / (n + 1.0)));
  }
  SuiteResult r = numeric("bergman-moments", worst, 1e-10 * cfg.tolerance_scale);
  r.passed = r.passed && !flagged;
  return r;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
  std::vector<std::function<SuiteResult()>> suites{
      [&] { return series_algebra(config); },
      [&] { return toeplitz_homomorphism(config); },
      [] { return monomial_norm(); },
      [&] { return pythagorean(config); },
      [&] { return level_set(config); },
      [&] { return geometric_lemma(config); },
      [&] { return uniform_geometry(config); },
      [&] { return bergman_moments(config); },
  };
  std::vector<SuiteResult> results;
  for (const auto& suite : suites) results.push_back(suite());
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
}

nlohmann::json to_json(const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : results) {
    suites.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"exact", r.exact},
                      {"worst", r.worst},
                      {"tolerance", r.tolerance},
                      {"detail", r.detail}});
  }
  return {{"passed", all_passed(results)}, {"suites", suites}};
}

}  // namespace hb
