#include "hb/symbol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hb {

BoundaryDistances BoundaryDistances::polar(double one_minus_r, double angle) {
  const double y = one_minus_r;
  const double half_sin = std::sin(0.5 * angle);
  return {y * (2.0 - y), y * y + 4.0 * (1.0 - y) * half_sin * half_sin};
}

BoundaryDistances BoundaryDistances::shifted(double u, double v) {
  // 1 - |z|^2 = (1 - x)(1 + x) - y^2 with x = 1 - u.
  return {u * (2.0 - u) - v * v, u * u + v * v};
}

BoundaryDistances BoundaryDistances::of(complex z) {
  return shifted(1.0 - z.real(), z.imag());
}

double theta_modulus_sq(const BoundaryDistances& d) {
  const double exponent = -d.one_minus_abs_sq / d.dist_to_one_sq;
  return exponent < -700.0 ? 0.0 : std::exp(exponent);
}

double phi_c_modulus_sq(double c, const BoundaryDistances& d) {
  return std::pow(d.dist_to_one_sq, -c);
}

complex theta_value(complex z) {
  return std::exp(-0.5 * (1.0 + z) / (1.0 - z));
}

complex phi_c_value(double c, complex z) { return std::pow(1.0 - z, -c); }

Symbol Symbol::phi_c(double c, bool with_theta) {
  if (!std::isfinite(c) || c < 0.0 || (c == 0.0 && !with_theta)) {
    throw std::invalid_argument("Symbol::phi_c: exponent must be positive");
  }
  Symbol s;
  s.c_ = c;
  s.with_theta_ = with_theta;
  return s;
}

Symbol Symbol::theta() { return phi_c(0.0, true); }

Symbol Symbol::polynomial(PowerSeries coeffs) {
  Symbol s;
  s.poly_ = std::move(coeffs);
  return s;
}

complex Symbol::operator()(complex z) const {
  if (std::abs(z) > 1.0) {
    throw std::domain_error("Symbol: evaluation outside the closed disk");
  }
  if (poly_) return evaluate_polynomial(*poly_, z);
  if (z == complex{1.0, 0.0}) {
    throw std::domain_error("Symbol: closed form is singular at z = 1");
  }
  complex value = c_ > 0.0 ? phi_c_value(c_, z) : complex{1.0};
  if (with_theta_) value *= theta_value(z);
  return value;
}

complex Symbol::boundary_value(double angle) const {
  if (poly_) return evaluate_polynomial(*poly_, std::polar(1.0, angle));
  const double a = std::remainder(angle, 2.0 * std::numbers::pi);
  if (a == 0.0) {
    throw std::domain_error("Symbol: closed form is singular at z = 1");
  }
  // With a reduced to (0, 2 pi): 1 - e^{ia} = 2 sin(a/2) e^{i(a - pi)/2}.
  const double t = a > 0.0 ? a : a + 2.0 * std::numbers::pi;
  const double half_sin = std::sin(0.5 * t);
  complex value{1.0};
  if (c_ > 0.0) {
    value = std::polar(std::pow(2.0 * half_sin, -c_),
                       -c_ * 0.5 * (t - std::numbers::pi));
  }
  // (1 + e^{ia})/(1 - e^{ia}) = i cot(a/2)
  if (with_theta_) value *= std::polar(1.0, -0.5 * std::cos(0.5 * t) / half_sin);
  return value;
}

double Symbol::modulus_sq_polar(double one_minus_r, double angle) const {
  if (poly_) {
    return std::norm(
        evaluate_polynomial(*poly_, std::polar(1.0 - one_minus_r, angle)));
  }
  const auto d = BoundaryDistances::polar(one_minus_r, angle);
  double value = c_ > 0.0 ? phi_c_modulus_sq(c_, d) : 1.0;
  if (with_theta_) value *= theta_modulus_sq(d);
  return value;
}

PowerSeries Symbol::series(std::size_t order) const {
  if (poly_) return poly_->truncated(order);
  if (c_ == 0.0) return theta_series(order);
  PowerSeries phi = phi_c_series(c_, order);
  return with_theta_ ? multiply(theta_series(order), phi, order) : phi;
}

bool Symbol::has_real_coefficients() const {
  return poly_ ? poly_->has_real_coefficients() : true;
}

std::string Symbol::describe() const {
  std::ostringstream os;
  if (poly_) {
    os << "polynomial(degree=" << poly_->degree() << ")";
    return os.str();
  }
  if (with_theta_) os << "theta";
  if (c_ > 0.0) {
    if (with_theta_) os << "*";
    os << "phi_c(c=" << c_ << ")";
  }
  return os.str();
}

}  // namespace hb
