#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "hb/boundary.hpp"
#include "hb/symbol.hpp"

namespace hb {

/// Dyadic Carleson square S_{n,k} = { r e^{it} : t in I_{n,k}, 1 - r <= 2^{-n} }
/// with I_{n,k} = [2 pi (k-1) 2^{-n}, 2 pi k 2^{-n}] for k > 0 and the
/// conjugate arc for k < 0; n >= 1, 1 <= |k| <= 2^{n-1}.
struct DyadicSquare {
  int level;
  long index;

  /// Throws std::invalid_argument when (level, index) is out of range.
  void validate() const;
  double height() const;
  double angle_lo() const;
  double angle_hi() const;
  /// The two squares of the next level lying under this one.
  std::array<DyadicSquare, 2> children() const;

  friend bool operator==(const DyadicSquare&, const DyadicSquare&) = default;
};

bool square_contains(complex z, const DyadicSquare& s);

/// Stolz angle with vertex 1: (1 - |z|)/|1 - z| >= alpha. Requires |z| < 1.
bool stolz_contains(complex z, double alpha);

/// Opening for which S_{n,1} lies in the Stolz angle union the squares
/// S_{m,2}, m > n.
inline constexpr double kDyadicStolzAlpha = 1.0 / (4.0 * std::numbers::pi + 2.0);

/// Nonnegative density on the disk, evaluated in polar form
/// (1 - r, angle) so that points near the circle keep full precision.
/// Integrated against normalized area dA = r dr dt / pi.
class Density {
 public:
  using Fn = std::function<double(double one_minus_r, double angle)>;

  Density(std::string label, Fn fn, bool conjugation_symmetric)
      : label_(std::move(label)), fn_(std::move(fn)), symmetric_(conjugation_symmetric) {}

  double operator()(double one_minus_r, double angle) const { return fn_(one_minus_r, angle); }
  /// Throws std::domain_error unless |z| < 1.
  double at(complex z) const;

  const std::string& label() const { return label_; }
  bool conjugation_symmetric() const { return symmetric_; }

 private:
  std::string label_;
  Fn fn_;
  bool symmetric_;
};

Density uniform_density();

/// Radial weight G, given as a function of 1 - r.
struct RadialWeight {
  std::string label;
  std::function<double(double one_minus_r)> fn;
};

RadialWeight unit_weight();
/// exp(-c/(1 - r)).
RadialWeight gevrey_weight(double c);

/// |phi(z)|^2 G(|z|).
Density symbol_density(const Symbol& phi, const RadialWeight& weight);

/// Annular sector { (1 - r) in [y_lo, y_hi], angle in [angle_lo, angle_hi] }.
struct PolarBox {
  double angle_lo;
  double angle_hi;
  double y_lo;
  double y_hi;
};

PolarBox box_of(const DyadicSquare& s);
/// The part of S_{n,k} not covered by its children: 1 - r in [h/2, h].
PolarBox top_box(const DyadicSquare& s);

/// Refinement schedule: at level l the rule uses 8 + 4l Gauss nodes per
/// panel and grading depth 12 + 8l. Estimates at successive levels are
/// compared until they agree to rel_tol.
struct QuadratureOptions {
  int min_refinement = 0;
  int max_refinement = 4;
  double rel_tol = 0.01;
};

struct MeasureEstimate {
  double value = 0.0;
  int refinement = 0;
  bool converged = false;
};

/// Single-level tensor rule: radial panels geometric (ratio 1/2) toward the
/// edge nearest the circle; angular panels geometric toward angle 0 when the
/// box touches it, otherwise uniform. The radial grading deepens for angular
/// nodes close to the point 1 so layers of width ~|1 - z|^2 are resolved.
double box_quadrature(const Density& d, const PolarBox& box, int refinement);

MeasureEstimate box_measure(const Density& d, const PolarBox& box,
                            const QuadratureOptions& opts = {});
MeasureEstimate square_measure(const Density& d, const DyadicSquare& s,
                               const QuadratureOptions& opts = {});

enum class CarlesonClass { vanishing, bounded, unbounded, inconclusive };
std::string to_string(CarlesonClass c);

struct LevelRow {
  int level = 0;
  long k_max = 0;
  double max_measure = 0.0;
  /// 2^n max_k mu(S_{n,k})
  double ratio = 0.0;
  int max_refinement = 0;
  bool flagged = false;
};

/// Classification of the level ratios: slope of log2(ratio) against n.
/// slope <= -slope_margin: vanishing; slope >= slope_margin: unbounded;
/// otherwise bounded when max/min ratio <= band, else inconclusive.
struct ProfileOptions {
  int n_min = 6;
  int n_max = 14;
  double slope_margin = 0.1;
  double band = 3.0;
  QuadratureOptions quadrature;
};

struct CarlesonReport {
  std::string density;
  bool symmetric = false;
  ProfileOptions options;
  std::vector<LevelRow> rows;
  double slope = 0.0;
  double spread = 0.0;
  CarlesonClass classification = CarlesonClass::inconclusive;

  bool flagged() const;
  /// Highest quadrature refinement any square needed.
  int refinement() const;
};

/// Scans every dyadic square at levels n_min..n_max (only k > 0 when the
/// density is conjugation symmetric and `symmetric` is set).
CarlesonReport level_profile(const Density& d, bool symmetric, const ProfileOptions& opts = {});

CarlesonClass classify(const std::vector<LevelRow>& rows, const ProfileOptions& opts,
                       double* slope_out = nullptr, double* spread_out = nullptr);

struct GeometricLemmaResult {
  bool passed = true;
  std::size_t samples = 0;
  std::size_t in_square_union = 0;
  std::size_t in_stolz = 0;
  /// Smallest (1 - |z|)/|1 - z| seen among points outside the square union.
  double min_stolz_ratio = 1.0;
};

/// Samples S_{n,1} uniformly in area and checks that every point outside
/// the union of S_{m,2}, m > n, lies in the Stolz angle with opening alpha.
GeometricLemmaResult geometric_lemma_check(int n, std::size_t samples,
                                           std::uint64_t seed = 20240917,
                                           double alpha = kDyadicStolzAlpha);

struct MomentEstimate {
  double value = 0.0;
  double error = 0.0;
  bool flagged = false;
};

/// G_n = 2 int_0^1 G(r) r^{2n+1} dr by adaptive Gauss-Kronrod.
MomentEstimate moments(const RadialWeight& g, int n);

/// Supremum of the density over a grid graded geometrically toward the
/// circle and toward the point 1, with 4 * 2^refinement nodes per octave.
double graded_sup(const Density& d, int refinement);

enum class Containment { compactly_contained, contained, not_contained, inconclusive };
std::string to_string(Containment c);
Containment containment_from(CarlesonClass c);

struct WeightedContainment {
  CarlesonReport report;
  Containment containment = Containment::inconclusive;
};

/// H^2(w) inside H(b) iff |phi|^2 G dA is Carleson; compactly iff vanishing.
/// G = 1 is the Dirichlet space.
WeightedContainment weighted_containment(const SymbolTriple& triple, const RadialWeight& g,
                                         const ProfileOptions& opts = {});
WeightedContainment weighted_containment(const Symbol& phi, const RadialWeight& g,
                                         const ProfileOptions& opts = {});

/// CSV columns n,k_max,ratio.
void write_report_csv(std::ostream& os, const CarlesonReport& report);
nlohmann::json to_json(const CarlesonReport& report);

}  // namespace hb
