#include "hb/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hb/parallel.hpp"

namespace hb {

namespace {

/// Least-squares slope of ys against xs.
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

nlohmann::json exponent_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

double hp_integral_mean(const Symbol& f, double p, double r, std::size_t grid_size) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("hp_integral_mean: radius must lie in (0, 1)");
  }
  if (!(p > 0.0)) throw std::invalid_argument("hp_integral_mean: p must be positive");
  const double y = 1.0 - r;
  const double offset = BoundaryGrid::default_offset(grid_size);
  if (std::isinf(p)) {
    double sup = 0.0;
    for (std::size_t j = 0; j < grid_size; ++j) {
      sup = std::max(sup, f.modulus_sq_polar(y, BoundaryGrid::angle(j, grid_size, offset)));
    }
    return std::sqrt(sup);
  }
  const double half_p = 0.5 * p;
  double acc = 0.0;
  for (std::size_t j = 0; j < grid_size; ++j) {
    acc += std::pow(f.modulus_sq_polar(y, BoundaryGrid::angle(j, grid_size, offset)), half_p);
  }
  return acc / static_cast<double>(grid_size);
}

HpVerdict hp_membership(const Symbol& f, double p, const HpOptions& opts) {
  if (!(p > 0.0)) throw std::invalid_argument("hp_membership: p must be positive");
  if (opts.j_max - opts.j_min < opts.fit_points) {
    throw std::invalid_argument("hp_membership: radius schedule shorter than the fit");
  }
  HpVerdict verdict;
  verdict.p = p;
  const std::size_t levels = static_cast<std::size_t>(opts.j_max - opts.j_min + 1);
  verdict.evidence.resize(levels);
  parallel_for(levels, [&](std::size_t i) {
    const int j = opts.j_min + static_cast<int>(i);
    const std::size_t grid = std::clamp(std::size_t{1} << (j + opts.grid_shift),
                                        opts.min_grid, opts.max_grid);
    const double r = 1.0 - std::ldexp(1.0, -j);
    verdict.evidence[i] = {r, hp_integral_mean(f, p, r, grid), grid};
  });

  const auto& ev = verdict.evidence;
  const double last = ev.back().mean;
  verdict.last_relative_change =
      last > 0.0 ? std::abs(last - ev[ev.size() - 2].mean) / last : 0.0;

  std::vector<double> js, logs;
  double largest = 0.0;
  for (std::size_t i = levels - static_cast<std::size_t>(opts.fit_points); i < levels; ++i) {
    const double delta = std::abs(ev[i].mean - ev[i - 1].mean);
    largest = std::max(largest, delta);
    js.push_back(static_cast<double>(opts.j_min) + static_cast<double>(i));
    logs.push_back(std::log2(std::max(delta, 1e-15 * std::max(last, 1e-300))));
  }
  if (largest <= 1e-12 * last) {
    verdict.growth_exponent = -kInfinity;
  } else {
    verdict.growth_exponent = fit_slope(js, logs);
  }

  if (verdict.growth_exponent >= opts.margin) {
    verdict.member = Verdict::no;
  } else if (verdict.growth_exponent <= -opts.margin &&
             verdict.last_relative_change <= opts.stabilization_tol) {
    verdict.member = Verdict::yes;
  } else {
    verdict.member = Verdict::inconclusive;
  }
  return verdict;
}

double conjugate_exponent(double p) {
  if (!(p >= 2.0)) {
    throw std::invalid_argument("containment_hp: p must be >= 2 (H^p is strictly larger than H(b) otherwise)");
  }
  if (p == 2.0) return kInfinity;
  if (std::isinf(p)) return 2.0;
  return 2.0 * p / (p - 2.0);
}

HpContainment containment_hp(const Symbol& phi, double p, const HpOptions& opts) {
  HpContainment result;
  result.p = p;
  result.p_tilde = conjugate_exponent(p);
  result.evidence = hp_membership(phi, result.p_tilde, opts);
  result.verdict = result.evidence.member;
  return result;
}

HpContainment containment_hp(const SymbolTriple& triple, double p, const HpOptions& opts) {
  return containment_hp(triple.phi, p, opts);
}

SarasonCheck sarason_limit_check(const PowerSeries& phi, double margin, int fit_blocks) {
  SarasonCheck check;
  const std::size_t order = phi.order();
  check.partial_sums.resize(order + 1);
  double acc = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    acc += std::norm(phi[k]);
    check.partial_sums[k] = acc;
  }

  std::vector<double> blocks;
  for (std::size_t lo = 1; 2 * lo - 1 <= order; lo *= 2) {
    double sum = 0.0;
    for (std::size_t k = lo; k < 2 * lo; ++k) sum += std::norm(phi[k]);
    blocks.push_back(sum);
  }
  if (blocks.size() < static_cast<std::size_t>(fit_blocks)) {
    return check;  // too short to judge
  }
  std::vector<double> js, logs;
  double largest = 0.0;
  const double floor = 1e-300;
  for (std::size_t j = blocks.size() - static_cast<std::size_t>(fit_blocks); j < blocks.size(); ++j) {
    largest = std::max(largest, blocks[j]);
    js.push_back(static_cast<double>(j));
    logs.push_back(std::log2(std::max(blocks[j], floor)));
  }
  if (largest <= 1e-30 * acc) {
    check.block_slope = -kInfinity;
    check.convergent = Verdict::yes;
    return check;
  }
  check.block_slope = fit_slope(js, logs);
  if (check.block_slope <= -margin) {
    check.convergent = Verdict::yes;
  } else if (check.block_slope >= margin) {
    check.convergent = Verdict::no;
  }
  return check;
}

nlohmann::json to_json(const HpVerdict& v) {
  nlohmann::json evidence = nlohmann::json::array();
  for (const auto& e : v.evidence) {
    evidence.push_back({{"r", e.radius}, {"mean", e.mean}, {"grid", e.grid_size}});
  }
  return {{"p", exponent_json(v.p)},
          {"member", to_string(v.member)},
          {"growth_exponent",
           std::isinf(v.growth_exponent) ? nlohmann::json(nullptr) : nlohmann::json(v.growth_exponent)},
          {"last_relative_change", v.last_relative_change},
          {"evidence", evidence}};
}

nlohmann::json to_json(const HpContainment& c) {
  const auto ev = to_json(c.evidence);
  return {{"p", exponent_json(c.p)},
          {"p_tilde", exponent_json(c.p_tilde)},
          {"verdict", to_string(c.verdict)},
          {"compact", c.compact},
          {"growth_exponent", ev["growth_exponent"]},
          {"evidence", ev["evidence"]}};
}

}  // namespace hb
