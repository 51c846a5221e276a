// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hb/boundary.hpp"
#include "hb/carleson.hpp"
#include "hb/casestudy.hpp"
#include "hb/hardy.hpp"
#include "hb/series.hpp"
#include "hb/toeplitz.hpp"

namespace {

using hb::PowerSeries;
using hb::Symbol;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> body;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

PowerSeries random_disk_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PowerSeries f(order);
  for (std::size_t k = 0; k <= order; ++k) {
    f[k] = std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
  }
  return f;
}

Outcome toeplitz_homomorphism() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> degree(0, 64);
  std::vector<PowerSeries> polys;
  for (int i = 0; i < 100; ++i) polys.push_back(random_disk_series(rng, degree(rng)));
  double worst = 0.0;
  for (int pair = 0; pair < 100; ++pair) {
    const PowerSeries phi = random_disk_series(rng, 64);
    const PowerSeries psi = random_disk_series(rng, 64);
    for (const auto& p : polys) worst = std::max(worst, hb::homomorphism_residual(phi, psi, p));
  }
  return {worst <= 1e-12, "max residual " + fmt(worst) + " over 100 pairs x 100 polynomials"};
}

Outcome norm_formulas() {
  double worst = 0.0;
  for (const PowerSeries& phi :
       {hb::phi_c_series(0.5, 256), hb::phi_c_series(1.0, 256), hb::theta_series(256)}) {
    for (std::size_t n = 0; n <= 256; ++n) {
      worst = std::max(worst, std::abs(hb::monomial_hb_norm_sq(phi, n) -
                                       hb::hb_norm_sq(phi, PowerSeries::monomial(n))));
    }
  }
  bool exact = true;
  const PowerSeries phi1 = hb::phi_c_series(1.0, 256);
  for (std::size_t n = 0; n <= 256; ++n) {
    exact = exact && hb::monomial_hb_norm_sq(phi1, n) == static_cast<double>(n) + 2.0 &&
            hb::hb_norm_sq(phi1, PowerSeries::monomial(n)) == static_cast<double>(n) + 2.0;
  }
  return {worst <= 1e-12 && exact,
          "max |formula - norm| " + fmt(worst) + (exact ? ", phi_1 gives n+2 exactly" : ", phi_1 NOT exact")};
}

Outcome pythagorean() {
  double worst = 0.0, min_a0 = 1.0;
  hb::TripleOptions opts;
  opts.tolerance = hb::kInfinity;
  for (const Symbol& phi : {Symbol::phi_c(0.25), Symbol::phi_c(0.5), Symbol::phi_c(1.0, true)}) {
    const hb::SymbolTriple t = hb::symbol_from_phi(phi, opts);
    worst = std::max(worst, t.max_residual);
    min_a0 = std::min(min_a0, t.a_at_zero());
  }
  return {worst <= 1e-8 && min_a0 > 0.0, "max residual " + fmt(worst) + ", min a(0) " + fmt(min_a0)};
}

double quarter_reconstruction_error(std::size_t m) {
  std::vector<hb::complex> w(m);
  const double offset = hb::BoundaryGrid::default_offset(m);
  for (std::size_t j = 0; j < m; ++j) {
    w[j] = std::abs(Symbol::phi_c(0.25).boundary_value(hb::BoundaryGrid::angle(j, m, offset)));
  }
  const PowerSeries o = hb::outer_from_modulus(hb::BoundaryGrid(std::move(w)), 16);
  const PowerSeries expected = hb::phi_c_series(0.25, 16);
  double worst = 0.0;
  for (std::size_t k = 0; k <= 16; ++k) worst = std::max(worst, std::abs(o[k] - expected[k]));
  return worst;
}

Outcome outer_reconstruction() {
  const double e14 = quarter_reconstruction_error(std::size_t{1} << 14);
  const double e15 = quarter_reconstruction_error(std::size_t{1} << 15);
  return {e14 <= 1e-3 && e15 < e14, "error " + fmt(e14) + " at 2^14, " + fmt(e15) + " at 2^15"};
}

Outcome hp_oracle() {
  struct Case {
    double c, p;
    hb::Verdict expected;
  };
  const std::vector<Case> cases{{0.1, 4.0, hb::Verdict::yes},
                                {0.4, 4.0, hb::Verdict::no},
                                {0.2, hb::kInfinity, hb::Verdict::yes},
                                {0.6, hb::kInfinity, hb::Verdict::no}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto r = hb::containment_hp(Symbol::phi_c(c.c), c.p);
    ok = ok && r.verdict == c.expected;
    detail += "(" + fmt(c.c) + "," + fmt(c.p) + ")->" + hb::to_string(r.verdict) + " ";
  }
  return {ok, detail};
}

Outcome uniform_geometry() {
  const hb::Density one = hb::uniform_density();
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const double h = std::ldexp(1.0, -n);
    const double expected = 2.0 * h * h - h * h * h;
    const long kmax = 1L << (n - 1);
    for (long k = -kmax; k <= kmax; ++k) {
      if (k == 0) continue;
      worst = std::max(worst, std::abs(hb::square_measure(one, {n, k}).value - expected) / expected);
    }
  }
  return {worst <= 1e-8, "max relative error " + fmt(worst) + " over every square, n = 1..12"};
}

std::string profile_detail(const hb::CarlesonReport& r) {
  return "slope " + fmt(r.slope) + ", spread " + fmt(r.spread) + ", " + hb::to_string(r.classification) +
         (r.flagged() ? " [flagged]" : "");
}

Outcome dirichlet_regimes() {
  const auto e = hb::run_experiment({0.25, 0.5, 0.75}, false);
  const auto& a = e.entries[0].report;
  const auto& b = e.entries[1].report;
  const auto& c = e.entries[2].report;
  const bool ok = a.classification == hb::CarlesonClass::vanishing && a.slope <= -0.1 &&
                  b.classification == hb::CarlesonClass::bounded && std::abs(b.slope) < 0.1 &&
                  b.spread <= 3.0 && c.classification == hb::CarlesonClass::unbounded &&
                  std::abs(c.slope - 0.5) <= 0.15 && !e.flagged();
  return {ok, "c=0.25: " + profile_detail(a) + "; c=0.5: " + profile_detail(b) + "; c=0.75: " +
                  profile_detail(c)};
}

Outcome theta_regimes() {
  const auto e = hb::run_experiment({0.75, 1.0, 1.25}, true);
  const auto& a = e.entries[0].report;
  const auto& b = e.entries[1].report;
  const auto& c = e.entries[2].report;
  const bool ok = a.classification == hb::CarlesonClass::vanishing &&
                  b.classification == hb::CarlesonClass::bounded && std::abs(b.slope) < 0.1 &&
                  c.classification == hb::CarlesonClass::unbounded && c.slope >= 0.2 && !e.flagged();
  return {ok, "c=0.75: " + profile_detail(a) + "; c=1: " + profile_detail(b) + "; c=1.25: " +
                  profile_detail(c)};
}

Outcome level_sets() {
  double worst = 0.0;
  bool tangent = true;
  for (double c : {1.0, 2.0}) {
    for (double t : {std::exp(-1.0), std::exp(-2.0)}) {
      worst = std::max(worst, hb::levelset_identity_check(c, t, 100));
      const hb::LevelCircle circle(t);
      tangent = tangent && circle.center + circle.radius == 1.0;
    }
  }
  return {worst <= 1e-12 && tangent,
          "max deviation " + fmt(worst) + (tangent ? ", center + radius == 1" : ", tangency broken")};
}

Outcome geometric_lemma() {
  bool ok = true;
  std::string detail;
  for (int n : {4, 8}) {
    const auto g = hb::geometric_lemma_check(n, 10000);
    ok = ok && g.passed;
    detail += "n=" + std::to_string(n) + ": " + std::to_string(g.in_square_union) + " in squares, " +
              std::to_string(g.in_stolz) + " in Stolz (min ratio " + fmt(g.min_stolz_ratio) + ") ";
  }
  return {ok, detail};
}

Outcome gevrey() {
  double worst_change = 0.0;
  bool finite = true;
  for (double c : {0.5, 1.0, 2.0}) {
    for (double cp : {0.5, 1.0}) {
      const hb::Density d = hb::symbol_density(Symbol::phi_c(c), hb::gevrey_weight(cp));
      const double s0 = hb::graded_sup(d, 0);
      const double s1 = hb::graded_sup(d, 1);
      finite = finite && std::isfinite(s0) && std::isfinite(s1) && s1 > 0.0;
      worst_change = std::max(worst_change, std::abs(s1 - s0) / s1);
    }
  }
  double worst_moment = 0.0;
  bool flagged = false;
  for (int n = 0; n <= 32; ++n) {
    const auto m = hb::moments(hb::unit_weight(), n);
    flagged = flagged || m.flagged;
    worst_moment = std::max(worst_moment, std::abs(m.value - 1.0 / (n + 1.0)));
  }
  return {finite && worst_change <= 0.05 && worst_moment <= 1e-10 && !flagged,
          "sup change under doubling " + fmt(worst_change) + ", moment error " + fmt(worst_moment)};
}

Outcome sarason() {
  const auto a = hb::sarason_limit_check(hb::phi_c_series(0.2, 256));
  const auto b = hb::sarason_limit_check(hb::phi_c_series(1.0, 256));
  bool exact = true;
  for (std::size_t n = 0; n < b.partial_sums.size(); ++n) {
    exact = exact && b.partial_sums[n] == static_cast<double>(n) + 2.0;
  }
  return {a.convergent == hb::Verdict::yes && b.convergent == hb::Verdict::no && exact,
          "phi_0.2: " + hb::to_string(a.convergent) + " (block slope " + fmt(a.block_slope) +
              "), phi_1: " + hb::to_string(b.convergent) + (exact ? ", sums n+2 exact" : ", sums inexact")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Toeplitz homomorphism", 5.0, toeplitz_homomorphism},
      {2, "norm formulas", 0.0, norm_formulas},
      {3, "Pythagorean pipeline", 0.0, pythagorean},
      {4, "outer reconstruction", 0.0, outer_reconstruction},
      {5, "H^p containment oracle", 30.0, hp_oracle},
      {6, "uniform-density geometry", 0.0, uniform_geometry},
      {7, "Dirichlet regimes without theta", 180.0, dirichlet_regimes},
      {8, "Dirichlet regimes with theta", 180.0, theta_regimes},
      {9, "level-set identities", 0.0, level_sets},
      {10, "geometric lemma", 0.0, geometric_lemma},
      {11, "Gevrey boundedness and Bergman moments", 0.0, gevrey},
      {12, "Sarason endpoint", 0.0, sarason},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds >= c.time_limit) {
      o.passed = false;
      o.detail += " [over the " + fmt(c.time_limit) + " s budget]";
    }
    if (!o.passed) ++failures;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.passed ? "PASS" : "FAIL") << "  "
              << c.title << " - " << o.detail << " (" << fmt(seconds) << " s)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
