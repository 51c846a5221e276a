#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hb/carleson.hpp"

namespace hb {

/// The level set { |theta(z)|^2 = t }: a circle inside the disk, tangent to
/// the unit circle at 1.
struct LevelCircle {
  double t;
  double s;
  double center;
  double radius;

  /// Throws std::invalid_argument unless 0 < t < 1.
  explicit LevelCircle(double level);

  /// The point center + radius e^{i psi}, returned as (u, v) = (1 - Re z, Im z)
  /// so that the distance to 1 stays exact for small psi.
  BoundaryDistances distances(double psi) const;
  complex point(double psi) const;
};

/// |phi_c|^2 dA, times |theta|^2 when with_theta is set. Requires c > 0.
Density mu_density(double c, bool with_theta);

/// Largest relative deviation, over `samples` points of C_t spread evenly
/// outside an arc of width 1e-6 around 1, among
///   |theta(z)|^2 = t,
///   |1 - z|^2 = (1 - |z|^2)/s,
///   |theta(z) phi_c(z)| = sqrt(t s^c) / (1 - |z|^2)^{c/2}.
double levelset_identity_check(double c, double t, int samples);

enum class GrowthTrend { vanishing, constant, divergent };
std::string to_string(GrowthTrend g);

struct GrowthSample {
  double psi;
  double one_minus_abs;
  double scaled_modulus;
};

struct GrowthCurve {
  double t;
  std::vector<GrowthSample> samples;
  /// Slope of log g against log(1/(1 - |z|)), g = (1 - |z|)^{1/2} |f(z)|.
  double slope;
  double sup;
};

struct MultiplierGrowth {
  double c;
  bool with_theta;
  std::vector<GrowthCurve> curves;
  GrowthTrend trend;
};

/// Follows C_t for t in {e^-1, e^-2, e^-3} toward 1 (psi = 2^-1 .. 2^-20).
/// Every curve's slope must clear +-margin for a divergent/vanishing trend.
MultiplierGrowth multiplier_growth_check(double c, bool with_theta, double margin = 0.05);

struct ExperimentEntry {
  double c;
  bool with_theta;
  CarlesonReport report;
  Containment verdict;
};

struct Experiment {
  std::vector<ExperimentEntry> entries;
  bool flagged() const;
};

Experiment run_experiment(const std::vector<double>& c_values, bool with_theta,
                          const ProfileOptions& opts = {});

/// Columns c,with_theta,n,max_ratio,slope,verdict; one row per (c, n).
void write_experiment_csv(std::ostream& os, const Experiment& e);
nlohmann::json to_json(const Experiment& e);
nlohmann::json to_json(const MultiplierGrowth& g);

}  // namespace hb
