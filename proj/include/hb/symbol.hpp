#pragma once

#include <optional>
#include <string>

#include "hb/series.hpp"

namespace hb {

/// The two quantities every closed form here depends on, 1 - |z|^2 and
/// |1 - z|^2, kept separately so they stay accurate as z approaches the
/// boundary or the point 1.
struct BoundaryDistances {
  double one_minus_abs_sq;
  double dist_to_one_sq;

  /// z = (1 - y) e^{i angle}.
  static BoundaryDistances polar(double one_minus_r, double angle);
  /// z = (1 - u) + i v.
  static BoundaryDistances shifted(double u, double v);
  static BoundaryDistances of(complex z);
};

/// |theta(z)|^2 = exp(-(1 - |z|^2)/|1 - z|^2), flushed to zero once the
/// exponent drops below -700.
double theta_modulus_sq(const BoundaryDistances& d);

/// |(1 - z)^{-c}|^2.
double phi_c_modulus_sq(double c, const BoundaryDistances& d);

/// theta(z) itself; unimodular on the circle away from 1.
complex theta_value(complex z);

/// (1 - z)^{-c}, principal branch.
complex phi_c_value(double c, complex z);

/// An analytic symbol on the disk: either the closed form
/// theta^{[with_theta]} (1 - z)^{-c}, or a polynomial given by coefficients.
///
/// Closed forms are evaluated directly (including on the unit circle away
/// from the singular point 1); their Taylor series are produced on demand.
class Symbol {
 public:
  /// (1 - z)^{-c}, optionally times theta. c = 0 is allowed only with theta.
  static Symbol phi_c(double c, bool with_theta = false);
  static Symbol theta();
  static Symbol polynomial(PowerSeries coeffs);

  bool is_closed_form() const { return !poly_.has_value(); }
  double exponent() const { return c_; }
  bool with_theta() const { return with_theta_; }
  const std::optional<PowerSeries>& coefficients() const { return poly_; }

  /// Value at |z| <= 1; throws std::domain_error at z = 1 for closed forms
  /// and outside the closed disk.
  complex operator()(complex z) const;

  /// Boundary value at e^{i angle}, angle in (0, 2 pi) for closed forms.
  /// Closed forms use exact boundary formulas, so theta is unimodular to
  /// rounding even next to the singular point.
  complex boundary_value(double angle) const;

  /// |f(z)|^2 at z = (1 - one_minus_r) e^{i angle}.
  double modulus_sq_polar(double one_minus_r, double angle) const;

  /// Taylor coefficients up to `order`.
  PowerSeries series(std::size_t order = kDefaultOrder) const;

  /// True when conj(f(conj z)) = f(z), i.e. |f|^2 is symmetric under
  /// conjugation.
  bool has_real_coefficients() const;

  std::string describe() const;

 private:
  Symbol() = default;

  double c_ = 0.0;
  bool with_theta_ = false;
  std::optional<PowerSeries> poly_;
};

}  // namespace hb
