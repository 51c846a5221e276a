#include "hb/carleson.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "hb/hardy.hpp"
#include "hb/parallel.hpp"
#include "hb/quadrature.hpp"

namespace hb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxRadialDepth = 160;

int nodes_for(int refinement) { return 8 + 4 * refinement; }
int depth_for(int refinement) { return 12 + 8 * refinement; }

struct Panel {
  double lo;
  double hi;
};

/// [0, width] split geometrically toward 0: [w/2, w], [w/4, w/2], ...,
/// and the remainder [0, w 2^{-depth}].
void graded_panels(double width, int depth, std::vector<Panel>& out) {
  out.clear();
  double right = width;
  for (int j = 0; j < depth; ++j) {
    out.push_back({0.5 * right, right});
    right *= 0.5;
  }
  out.push_back({0.0, right});
}

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

}  // namespace

void DyadicSquare::validate() const {
  if (level < 1 || level > 60) throw std::invalid_argument("DyadicSquare: level must be in [1, 60]");
  const long kmax = 1L << (level - 1);
  if (index == 0 || index > kmax || index < -kmax) {
    throw std::invalid_argument("DyadicSquare: index out of range for level " +
                                std::to_string(level));
  }
}

double DyadicSquare::height() const { return std::ldexp(1.0, -level); }

double DyadicSquare::angle_lo() const {
  const double h = height();
  return index > 0 ? kTwoPi * static_cast<double>(index - 1) * h
                   : -kTwoPi * static_cast<double>(-index) * h;
}

double DyadicSquare::angle_hi() const {
  const double h = height();
  return index > 0 ? kTwoPi * static_cast<double>(index) * h
                   : -kTwoPi * static_cast<double>(-index - 1) * h;
}

std::array<DyadicSquare, 2> DyadicSquare::children() const {
  const long sign = index > 0 ? 1 : -1;
  const long k = index * sign;
  return {DyadicSquare{level + 1, sign * (2 * k - 1)}, DyadicSquare{level + 1, sign * 2 * k}};
}

bool square_contains(complex z, const DyadicSquare& s) {
  s.validate();
  const double r = std::abs(z);
  if (!(r < 1.0) || 1.0 - r > s.height()) return false;
  if (r == 0.0) return false;
  double t = std::arg(s.index > 0 ? z : std::conj(z));
  if (t < 0.0) t += kTwoPi;
  const long k = s.index > 0 ? s.index : -s.index;
  const double h = s.height();
  return t >= kTwoPi * static_cast<double>(k - 1) * h && t <= kTwoPi * static_cast<double>(k) * h;
}

bool stolz_contains(complex z, double alpha) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw std::domain_error("stolz_contains: requires |z| < 1");
  return (1.0 - r) / std::abs(1.0 - z) >= alpha;
}

double Density::at(complex z) const {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw std::domain_error("Density: evaluation requires |z| < 1");
  return fn_(1.0 - r, std::arg(z));
}

Density uniform_density() {
  return Density("uniform", [](double, double) { return 1.0; }, true);
}

RadialWeight unit_weight() {
  return {"G=1", [](double) { return 1.0; }};
}

RadialWeight gevrey_weight(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("gevrey_weight: c must be positive");
  return {"G=exp(-" + std::to_string(c) + "/(1-r))", [c](double y) {
            const double e = -c / y;
            return e < -700.0 ? 0.0 : std::exp(e);
          }};
}

Density symbol_density(const Symbol& phi, const RadialWeight& weight) {
  auto g = weight.fn;
  return Density("|" + phi.describe() + "|^2 " + weight.label,
                 [phi, g](double y, double angle) { return phi.modulus_sq_polar(y, angle) * g(y); },
                 phi.has_real_coefficients());
}

PolarBox box_of(const DyadicSquare& s) {
  s.validate();
  return {s.angle_lo(), s.angle_hi(), 0.0, s.height()};
}

PolarBox top_box(const DyadicSquare& s) {
  s.validate();
  return {s.angle_lo(), s.angle_hi(), 0.5 * s.height(), s.height()};
}

double box_quadrature(const Density& d, const PolarBox& box, int refinement) {
  if (!(box.angle_hi > box.angle_lo) || !(box.y_hi > box.y_lo) || box.y_lo < 0.0) {
    throw std::invalid_argument("box_quadrature: degenerate box");
  }
  const int q = nodes_for(refinement);
  const int depth = depth_for(refinement);
  const GaussRule rule = gauss_legendre(static_cast<std::size_t>(q));

  // Work with nonnegative angles; boxes below the real axis are mirrored.
  const bool mirrored = box.angle_hi <= 0.0;
  const double a_lo = mirrored ? -box.angle_hi : box.angle_lo;
  const double a_hi = mirrored ? -box.angle_lo : box.angle_hi;
  const double sign = mirrored ? -1.0 : 1.0;

  std::vector<Panel> angular;
  if (a_lo == 0.0) {
    graded_panels(a_hi, depth, angular);
  } else {
    constexpr int kUniformPanels = 4;
    const double step = (a_hi - a_lo) / kUniformPanels;
    for (int p = 0; p < kUniformPanels; ++p) {
      angular.push_back({a_lo + p * step, p + 1 == kUniformPanels ? a_hi : a_lo + (p + 1) * step});
    }
  }

  const double width = box.y_hi - box.y_lo;
  std::vector<Panel> radial;
  double total = 0.0;
  for (const Panel& ap : angular) {
    const double a_mid = 0.5 * (ap.lo + ap.hi);
    const double a_half = 0.5 * (ap.hi - ap.lo);
    for (int i = 0; i < q; ++i) {
      const double x = a_mid + a_half * rule.nodes[static_cast<std::size_t>(i)];
      const double dist = std::min(x, kTwoPi - x);
      int extra = 0;
      if (dist * dist < width) {
        extra = static_cast<int>(std::ceil(std::log2(width / (dist * dist))));
      }
      graded_panels(width, std::min(depth + extra, kMaxRadialDepth), radial);
      double inner = 0.0;
      for (const Panel& rp : radial) {
        const double r_mid = box.y_lo + 0.5 * (rp.lo + rp.hi);
        const double r_half = 0.5 * (rp.hi - rp.lo);
        double panel = 0.0;
        for (int k = 0; k < q; ++k) {
          const double y = r_mid + r_half * rule.nodes[static_cast<std::size_t>(k)];
          panel += rule.weights[static_cast<std::size_t>(k)] * (1.0 - y) * d(y, sign * x);
        }
        inner += r_half * panel;
      }
      total += a_half * rule.weights[static_cast<std::size_t>(i)] * inner;
    }
  }
  return total / std::numbers::pi;
}

MeasureEstimate box_measure(const Density& d, const PolarBox& box, const QuadratureOptions& opts) {
  MeasureEstimate est;
  est.refinement = opts.min_refinement;
  est.value = box_quadrature(d, box, est.refinement);
  while (est.refinement < opts.max_refinement) {
    const double next = box_quadrature(d, box, est.refinement + 1);
    ++est.refinement;
    const bool agree = std::abs(next - est.value) <= opts.rel_tol * std::abs(next);
    est.value = next;
    if (agree) {
      est.converged = true;
      return est;
    }
  }
  return est;
}

MeasureEstimate square_measure(const Density& d, const DyadicSquare& s,
                               const QuadratureOptions& opts) {
  return box_measure(d, box_of(s), opts);
}

std::string to_string(CarlesonClass c) {
  switch (c) {
    case CarlesonClass::vanishing: return "vanishing";
    case CarlesonClass::bounded: return "bounded";
    case CarlesonClass::unbounded: return "unbounded";
    case CarlesonClass::inconclusive: return "inconclusive";
  }
  return "?";
}

bool CarlesonReport::flagged() const {
  return std::any_of(rows.begin(), rows.end(), [](const LevelRow& r) { return r.flagged; });
}

int CarlesonReport::refinement() const {
  int level = 0;
  for (const auto& r : rows) level = std::max(level, r.max_refinement);
  return level;
}

CarlesonClass classify(const std::vector<LevelRow>& rows, const ProfileOptions& opts,
                       double* slope_out, double* spread_out) {
  if (rows.size() < 2) throw std::invalid_argument("classify: need at least two levels");
  std::vector<double> ns, logs;
  double lo = kInfinity, hi = 0.0;
  for (const auto& r : rows) {
    ns.push_back(static_cast<double>(r.level));
    logs.push_back(std::log2(std::max(r.ratio, 1e-300)));
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  const double slope = fit_slope(ns, logs);
  const double spread = lo > 0.0 ? hi / lo : kInfinity;
  if (slope_out) *slope_out = slope;
  if (spread_out) *spread_out = spread;
  if (slope <= -opts.slope_margin) return CarlesonClass::vanishing;
  if (slope >= opts.slope_margin) return CarlesonClass::unbounded;
  return spread <= opts.band ? CarlesonClass::bounded : CarlesonClass::inconclusive;
}

CarlesonReport level_profile(const Density& d, bool symmetric, const ProfileOptions& opts) {
  if (opts.n_min < 1 || opts.n_max < opts.n_min + 1) {
    throw std::invalid_argument("level_profile: need 1 <= n_min < n_max");
  }
  CarlesonReport report;
  report.density = d.label();
  report.symmetric = symmetric && d.conjugation_symmetric();
  report.options = opts;
  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    const long kmax = 1L << (n - 1);
    std::vector<long> ks;
    if (!report.symmetric) {
      for (long k = -kmax; k <= -1; ++k) ks.push_back(k);
    }
    for (long k = 1; k <= kmax; ++k) ks.push_back(k);
    std::vector<MeasureEstimate> est(ks.size());
    parallel_for(ks.size(), [&](std::size_t i) {
      est[i] = square_measure(d, DyadicSquare{n, ks[i]}, opts.quadrature);
    });
    LevelRow row;
    row.level = n;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (est[i].value > row.max_measure || row.k_max == 0) {
        row.max_measure = est[i].value;
        row.k_max = ks[i];
      }
      row.max_refinement = std::max(row.max_refinement, est[i].refinement);
      row.flagged = row.flagged || !est[i].converged;
    }
    row.ratio = std::ldexp(row.max_measure, n);
    report.rows.push_back(row);
  }
  report.classification = classify(report.rows, opts, &report.slope, &report.spread);
  return report;
}

GeometricLemmaResult geometric_lemma_check(int n, std::size_t samples, std::uint64_t seed,
                                           double alpha) {
  const DyadicSquare base{n, 1};
  base.validate();
  const double h = base.height();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  GeometricLemmaResult result;
  result.samples = samples;
  const double r2_lo = (1.0 - h) * (1.0 - h);
  for (std::size_t i = 0; i < samples; ++i) {
    // Uniform in area: angle uniform, r^2 uniform.
    const double t = kTwoPi * h * unit(rng);
    const double r = std::sqrt(r2_lo + (1.0 - r2_lo) * unit(rng));
    if (!(r < 1.0)) continue;
    const complex z = std::polar(r, t);
    bool in_union = false;
    for (int m = n + 1; m <= 60 && std::ldexp(1.0, -m) >= 1.0 - r; ++m) {
      if (square_contains(z, DyadicSquare{m, 2})) {
        in_union = true;
        break;
      }
    }
    if (in_union) {
      ++result.in_square_union;
      continue;
    }
    const double ratio = (1.0 - r) / std::abs(1.0 - z);
    result.min_stolz_ratio = std::min(result.min_stolz_ratio, ratio);
    if (stolz_contains(z, alpha)) {
      ++result.in_stolz;
    } else {
      result.passed = false;
    }
  }
  return result;
}

MomentEstimate moments(const RadialWeight& g, int n) {
  if (n < 0) throw std::invalid_argument("moments: n must be nonnegative");
  const double power = 2.0 * n + 1.0;
  // Substituting y = 1 - r keeps the weight's argument exact near r = 1.
  auto integrand = [&](double y) { return 2.0 * g.fn(y) * std::pow(1.0 - y, power); };
  MomentEstimate est;
  double l1 = 0.0;
  est.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, 1.0, 20, 1e-14, &est.error, &l1);
  est.flagged = !std::isfinite(est.value) || !(est.error <= 1e-8 * std::max(std::abs(est.value), 1e-300));
  return est;
}

double graded_sup(const Density& d, int refinement) {
  const int per_octave = 4 << refinement;
  const int octaves = 60;
  double sup = 0.0;
  std::vector<double> angles{0.0};
  for (int i = 0; i <= octaves * per_octave; ++i) {
    const double a = std::numbers::pi * std::exp2(-static_cast<double>(i) / per_octave);
    angles.push_back(a);
    if (!d.conjugation_symmetric()) angles.push_back(-a);
  }
  for (int i = 0; i <= octaves * per_octave; ++i) {
    const double y = std::exp2(-static_cast<double>(i) / per_octave);
    for (double a : angles) sup = std::max(sup, d(y, a));
  }
  return sup;
}

std::string to_string(Containment c) {
  switch (c) {
    case Containment::compactly_contained: return "compactly-contained";
    case Containment::contained: return "contained-not-compact";
    case Containment::not_contained: return "not-contained";
    case Containment::inconclusive: return "inconclusive";
  }
  return "?";
}

Containment containment_from(CarlesonClass c) {
  switch (c) {
    case CarlesonClass::vanishing: return Containment::compactly_contained;
    case CarlesonClass::bounded: return Containment::contained;
    case CarlesonClass::unbounded: return Containment::not_contained;
    case CarlesonClass::inconclusive: return Containment::inconclusive;
  }
  return Containment::inconclusive;
}

WeightedContainment weighted_containment(const Symbol& phi, const RadialWeight& g,
                                         const ProfileOptions& opts) {
  WeightedContainment result;
  result.report = level_profile(symbol_density(phi, g), true, opts);
  result.containment = containment_from(result.report.classification);
  return result;
}

WeightedContainment weighted_containment(const SymbolTriple& triple, const RadialWeight& g,
                                         const ProfileOptions& opts) {
  return weighted_containment(triple.phi, g, opts);
}

void write_report_csv(std::ostream& os, const CarlesonReport& report) {
  const auto old_precision = os.precision(17);
  os << "n,k_max,ratio\n";
  for (const auto& r : report.rows) os << r.level << ',' << r.k_max << ',' << r.ratio << '\n';
  os.precision(old_precision);
}

nlohmann::json to_json(const CarlesonReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.level},
                    {"k_max", r.k_max},
                    {"max_measure", r.max_measure},
                    {"ratio", r.ratio},
                    {"refinement", r.max_refinement},
                    {"flagged", r.flagged}});
  }
  return {{"density", report.density},
          {"symmetric", report.symmetric},
          {"n_min", report.options.n_min},
          {"n_max", report.options.n_max},
          {"slope", report.slope},
          {"spread", std::isinf(report.spread) ? nlohmann::json(nullptr) : nlohmann::json(report.spread)},
          {"classification", to_string(report.classification)},
          {"quadrature",
           {{"rel_tol", report.options.quadrature.rel_tol},
            {"max_refinement", report.options.quadrature.max_refinement},
            {"refinement_used", report.refinement()}}},
          {"flagged", report.flagged()},
          {"note", "classification reflects the trend over the tested levels only"},
          {"rows", rows}};
}

}  // namespace hb
