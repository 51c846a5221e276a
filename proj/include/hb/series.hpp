#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hb {

using complex = std::complex<double>;

/// Truncated Taylor expansion c_0 + c_1 z + ... + c_N z^N about z = 0.
///
/// The truncation order N is part of the value: arithmetic never reads or
/// writes coefficients past it. Coefficients beyond the order are treated as
/// zero, so a series doubles as a polynomial of degree at most N.
class PowerSeries {
 public:
  /// The zero series of order 0.
  PowerSeries() : coeffs_(1) {}
  /// The zero series of the given order.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  PowerSeries(std::initializer_list<complex> coeffs);
  explicit PowerSeries(std::vector<complex> coeffs);

  static PowerSeries monomial(std::size_t n, complex scale = 1.0);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const complex> coeffs() const { return coeffs_; }

  complex operator[](std::size_t n) const { return coeffs_[n]; }
  complex& operator[](std::size_t n) { return coeffs_[n]; }

  /// Coefficient n, or zero past the truncation order.
  complex coeff_or_zero(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : complex{};
  }

  /// Index of the highest nonzero coefficient (0 for the zero series).
  std::size_t degree() const;

  /// Copy cut down or zero-padded to `order`.
  PowerSeries truncated(std::size_t order) const;

  bool has_real_coefficients() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<complex> coeffs_;
};

/// Coefficientwise sum; the result order is the larger of the two.
PowerSeries add(const PowerSeries& f, const PowerSeries& g);

/// Cauchy product h_n = sum_{k<=n} f_k g_{n-k} for n <= out_order.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g,
                     std::size_t out_order);

/// Product truncated at the smaller of the two orders.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g);

PowerSeries scale(const PowerSeries& f, complex s);

/// exp(f) truncated at the order of f, from n g_n = sum_{k=1}^n k f_k g_{n-k}.
PowerSeries exp(const PowerSeries& f);

/// Coefficients of (1 - z)^{-c}: phi_0 = 1, phi_{n+1} = phi_n (n + c)/(n + 1).
/// Throws std::invalid_argument for c <= 0.
PowerSeries phi_c_series(double c, std::size_t order);

/// Coefficients of the singular inner function exp(-(1/2)(1 + z)/(1 - z)).
PowerSeries theta_series(std::size_t order);

/// Horner evaluation at |z| < 1. Throws std::domain_error on |z| >= 1.
complex evaluate(const PowerSeries& f, complex z);

/// Horner evaluation without the disk check; exact for polynomials.
complex evaluate_polynomial(const PowerSeries& f, complex z);

/// Default truncation order for symbol series.
inline constexpr std::size_t kDefaultOrder = 256;

}  // namespace hb
