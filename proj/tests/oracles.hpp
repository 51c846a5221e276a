#pragma once

// Reference computations that share no code path with the library: direct
// formulas, dense matrices, contour integrals, Monte Carlo and Simpson.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline std::vector<cplx> convolve(const std::vector<cplx>& f, const std::vector<cplx>& g,
                                  std::size_t order) {
  std::vector<cplx> h(order + 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i + j <= order) h[i + j] += f[i] * g[j];
    }
  }
  return h;
}

/// Coefficients of (1 - z)^{-c}: Gamma(n + c) / (Gamma(c) n!).
inline double phi_c_coefficient(double c, std::size_t n) {
  const double nn = static_cast<double>(n);
  return std::exp(std::lgamma(nn + c) - std::lgamma(c) - std::lgamma(nn + 1.0));
}

/// Taylor coefficient k of an analytic f by the trapezoid rule on |z| = rho.
inline cplx contour_coefficient(const std::function<cplx(cplx)>& f, std::size_t k,
                                double rho = 0.5, std::size_t nodes = 512) {
  cplx acc = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes);
    acc += f(std::polar(rho, t)) * std::polar(1.0, -static_cast<double>(k) * t);
  }
  return acc / (static_cast<double>(nodes) * std::pow(rho, static_cast<double>(k)));
}

inline cplx theta(cplx z) { return std::exp(-0.5 * (1.0 + z) / (1.0 - z)); }

/// Dense upper-triangular matrix of the co-analytic Toeplitz operator,
/// entry (m, n) = conj(phi_{n - m}), applied to p.
inline std::vector<cplx> dense_toeplitz_apply(const std::vector<cplx>& phi,
                                              const std::vector<cplx>& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<cplx>> matrix(n, std::vector<cplx>(n));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = row; col < n; ++col) matrix[row][col] = std::conj(phi[col - row]);
  }
  std::vector<cplx> q(n);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) q[row] += matrix[row][col] * p[col];
  }
  return q;
}

/// mu(S) = int_S density dA, dA = dx dy / pi, by rejection sampling in the
/// Cartesian bounding box of the sector { angle in [a0, a1], 1 - |z| <= h }
/// (a1 - a0 <= pi/2, a0 >= 0).
inline double monte_carlo_sector(const std::function<double(cplx)>& density, double a0,
                                 double a1, double h, std::size_t samples,
                                 std::uint64_t seed) {
  const double r_lo = 1.0 - h;
  double x_lo = 1.0, x_hi = -1.0, y_lo = 1.0, y_hi = -1.0;
  for (double r : {r_lo, 1.0}) {
    for (double a : {a0, a1}) {
      x_lo = std::min(x_lo, r * std::cos(a));
      x_hi = std::max(x_hi, r * std::cos(a));
      y_lo = std::min(y_lo, r * std::sin(a));
      y_hi = std::max(y_hi, r * std::sin(a));
    }
  }
  if (a0 <= 0.0 && a1 >= 0.0) x_hi = 1.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x_lo, x_hi), uy(y_lo, y_hi);
  double acc = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const cplx z{ux(rng), uy(rng)};
    const double r = std::abs(z);
    if (r >= 1.0 || r < r_lo) continue;
    const double t = std::arg(z);
    if (t < a0 || t > a1) continue;
    acc += density(z);
  }
  const double box = (x_hi - x_lo) * (y_hi - y_lo);
  return box * acc / static_cast<double>(samples) / std::numbers::pi;
}

/// Composite Simpson on [a, b] with an even number of intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::size_t intervals) {
  if (intervals % 2) ++intervals;
  const double h = (b - a) / static_cast<double>(intervals);
  double acc = f(a) + f(b);
  for (std::size_t i = 1; i < intervals; ++i) {
    acc += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
  }
  return acc * h / 3.0;
}

}  // namespace oracle
