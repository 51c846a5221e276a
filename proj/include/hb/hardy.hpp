#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "hb/boundary.hpp"
#include "hb/symbol.hpp"

namespace hb {

enum class Verdict { yes, no, inconclusive };

std::string to_string(Verdict v);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Integral mean of |f(r zeta)|^p over the circle with normalized measure,
/// by the trapezoid rule on M offset nodes. For p = infinity, the maximum
/// over the nodes. Throws std::invalid_argument unless 0 < r < 1 and p > 0.
double hp_integral_mean(const Symbol& f, double p, double r, std::size_t grid_size);

struct HpEvidence {
  double radius;
  double mean;
  std::size_t grid_size;
};

/// Radii r_j = 1 - 2^{-j}, j = j_min..j_max. The grid at level j has
/// 2^{j + grid_shift} nodes, clamped to [min_grid, max_grid].
struct HpOptions {
  int j_min = 3;
  int j_max = 12;
  int grid_shift = 4;
  std::size_t min_grid = std::size_t{1} << 10;
  std::size_t max_grid = std::size_t{1} << 16;
  /// Consecutive increments used for the exponent fit.
  int fit_points = 6;
  double margin = 0.1;
  /// Largest relative change of the last mean allowed for "yes".
  double stabilization_tol = 0.05;
};

/// Membership test for H^p.
///
/// With M(r) the integral means, the increments M(r_{j+1}) - M(r_j) behave
/// like 2^{kappa j} when M(r) ~ A + B (1 - r)^{-kappa}. The fitted kappa is the
/// growth exponent: kappa >= margin means the means blow up (no); kappa <=
/// -margin together with a small last relative change means they settle (yes).
struct HpVerdict {
  double p = 0.0;
  Verdict member = Verdict::inconclusive;
  std::vector<HpEvidence> evidence;
  /// -infinity when the means are constant to rounding.
  double growth_exponent = 0.0;
  double last_relative_change = 0.0;
};

HpVerdict hp_membership(const Symbol& f, double p, const HpOptions& opts = {});

/// Answer to "is H^p contained in H(b)?", decided as phi in H^{p~} with
/// p~ = 2p/(p - 2) (p~ = infinity at p = 2, p~ = 2 at p = infinity).
struct HpContainment {
  double p = 0.0;
  double p_tilde = 0.0;
  Verdict verdict = Verdict::inconclusive;
  HpVerdict evidence;
  /// The H^p embedding into H(b) is never compact.
  bool compact = false;
};

double conjugate_exponent(double p);

/// Throws std::invalid_argument for p < 2.
HpContainment containment_hp(const Symbol& phi, double p, const HpOptions& opts = {});
HpContainment containment_hp(const SymbolTriple& triple, double p,
                             const HpOptions& opts = {});

/// Partial sums 1 + sum_{k<=n} |phi_k|^2, i.e. ||z^n||^2_{H(b)}, and whether
/// they converge (equivalently phi in H^2).
///
/// Convergence is judged by Cauchy condensation: the dyadic block sums
/// B_j = sum_{2^j <= k < 2^{j+1}} |phi_k|^2 are fitted as 2^{slope j} over the
/// last complete blocks; slope <= -margin converges, slope >= margin diverges.
struct SarasonCheck {
  std::vector<double> partial_sums;
  Verdict convergent = Verdict::inconclusive;
  double block_slope = 0.0;
};

SarasonCheck sarason_limit_check(const PowerSeries& phi, double margin = 0.1,
                                 int fit_blocks = 4);

nlohmann::json to_json(const HpVerdict& v);
nlohmann::json to_json(const HpContainment& c);

}  // namespace hb
