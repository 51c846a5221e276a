#include "hb/toeplitz.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hb {

namespace {

double l2_norm_sq(const PowerSeries& p) {
  double acc = 0.0;
  for (complex c : p.coeffs()) acc += std::norm(c);
  return acc;
}

}  // namespace

PowerSeries CoToeplitz::apply(const PowerSeries& p) const {
  const std::size_t deg = p.degree();
  if (deg > symbol_.order()) {
    throw std::invalid_argument("CoToeplitz::apply: polynomial degree " +
                                std::to_string(deg) + " exceeds symbol order " +
                                std::to_string(symbol_.order()));
  }
  PowerSeries q(deg);
  for (std::size_t k = 0; k <= deg; ++k) {
    complex acc{};
    for (std::size_t n = k; n <= deg; ++n) acc += p[n] * std::conj(symbol_[n - k]);
    q[k] = acc;
  }
  return q;
}

double hb_norm_sq(const PowerSeries& phi, const PowerSeries& p) {
  return l2_norm_sq(p) + l2_norm_sq(CoToeplitz(phi).apply(p));
}

double monomial_hb_norm_sq(const PowerSeries& phi, std::size_t n) {
  if (n > phi.order()) {
    throw std::invalid_argument("monomial_hb_norm_sq: n exceeds symbol order");
  }
  double acc = 1.0;
  for (std::size_t k = 0; k <= n; ++k) acc += std::norm(phi[k]);
  return acc;
}

double homomorphism_residual(const PowerSeries& phi, const PowerSeries& psi,
                             const PowerSeries& p) {
  const std::size_t deg = p.degree();
  const PowerSeries composed = CoToeplitz(phi).apply(CoToeplitz(psi).apply(p));
  const PowerSeries direct = CoToeplitz(multiply(phi, psi, deg)).apply(p);
  double residual = 0.0;
  for (std::size_t k = 0; k <= std::max(composed.order(), direct.order()); ++k) {
    residual = std::max(residual,
                        std::abs(composed.coeff_or_zero(k) - direct.coeff_or_zero(k)));
  }
  return residual;
}

}  // namespace hb
