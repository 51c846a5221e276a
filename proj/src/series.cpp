#include "hb/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hb {

PowerSeries::PowerSeries(std::initializer_list<complex> coeffs)
    : coeffs_(coeffs) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

PowerSeries::PowerSeries(std::vector<complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

PowerSeries PowerSeries::monomial(std::size_t n, complex scale) {
  PowerSeries p(n);
  p[n] = scale;
  return p;
}

std::size_t PowerSeries::degree() const {
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    if (coeffs_[n] != complex{}) return n;
  }
  return 0;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<complex> out(order + 1);
  std::copy_n(coeffs_.begin(), std::min(out.size(), coeffs_.size()),
              out.begin());
  return PowerSeries(std::move(out));
}

bool PowerSeries::has_real_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](complex c) { return c.imag() == 0.0; });
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries h(std::max(f.order(), g.order()));
  for (std::size_t n = 0; n <= h.order(); ++n) {
    h[n] = f.coeff_or_zero(n) + g.coeff_or_zero(n);
  }
  return h;
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g,
                     std::size_t out_order) {
  PowerSeries h(out_order);
  const std::size_t nf = f.order();
  const std::size_t ng = g.order();
  for (std::size_t n = 0; n <= out_order; ++n) {
    // k ranges over indices with k <= nf and n - k <= ng.
    const std::size_t k_lo = n > ng ? n - ng : 0;
    const std::size_t k_hi = std::min(n, nf);
    if (k_lo > k_hi) continue;
    complex acc{};
    for (std::size_t k = k_lo; k <= k_hi; ++k) acc += f[k] * g[n - k];
    h[n] = acc;
  }
  return h;
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g) {
  return multiply(f, g, std::min(f.order(), g.order()));
}

PowerSeries scale(const PowerSeries& f, complex s) {
  PowerSeries h = f;
  for (std::size_t n = 0; n <= h.order(); ++n) h[n] *= s;
  return h;
}

PowerSeries exp(const PowerSeries& f) {
  const std::size_t order = f.order();
  PowerSeries g(order);
  g[0] = std::exp(f[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    complex acc{};
    for (std::size_t k = 1; k <= n; ++k) {
      acc += static_cast<double>(k) * f[k] * g[n - k];
    }
    g[n] = acc / static_cast<double>(n);
  }
  return g;
}

PowerSeries phi_c_series(double c, std::size_t order) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("phi_c_series: exponent must be positive, got " +
                                std::to_string(c));
  }
  PowerSeries phi(order);
  double term = 1.0;
  phi[0] = term;
  for (std::size_t n = 0; n < order; ++n) {
    term *= (static_cast<double>(n) + c) / static_cast<double>(n + 1);
    phi[n + 1] = term;
  }
  return phi;
}

PowerSeries theta_series(std::size_t order) {
  // -(1/2)(1 + z)/(1 - z) = -1/2 - sum_{n>=1} z^n
  PowerSeries log_theta(order);
  log_theta[0] = -0.5;
  for (std::size_t n = 1; n <= order; ++n) log_theta[n] = -1.0;
  return exp(log_theta);
}

complex evaluate_polynomial(const PowerSeries& f, complex z) {
  complex acc{};
  for (std::size_t n = f.order() + 1; n-- > 0;) acc = acc * z + f[n];
  return acc;
}

complex evaluate(const PowerSeries& f, complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("evaluate: |z| must be < 1 for a truncated series");
  }
  return evaluate_polynomial(f, z);
}

}  // namespace hb
