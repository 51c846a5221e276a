#pragma once

#include "hb/series.hpp"

namespace hb {

/// The co-analytic Toeplitz operator with symbol conj(phi), acting on
/// polynomials: the upper-triangular matrix with entry conj(phi_{n-m}) in
/// row m, column n. Defined for unbounded phi since only phi_0..phi_n touch a
/// polynomial of degree n.
class CoToeplitz {
 public:
  explicit CoToeplitz(PowerSeries symbol) : symbol_(std::move(symbol)) {}

  const PowerSeries& symbol() const { return symbol_; }

  /// q_k = sum_{n=k}^{deg p} p_n conj(phi_{n-k}); the result has order deg p.
  /// Throws std::invalid_argument if deg p exceeds the symbol order.
  PowerSeries apply(const PowerSeries& p) const;

 private:
  PowerSeries symbol_;
};

/// ||p||^2_{H(b)} = ||p||_2^2 + ||T_conj(phi) p||_2^2.
double hb_norm_sq(const PowerSeries& phi, const PowerSeries& p);

/// ||z^n||^2_{H(b)} = 1 + sum_{k<=n} |phi_k|^2.
double monomial_hb_norm_sq(const PowerSeries& phi, std::size_t n);

/// Max coefficient deviation between T(phi) T(psi) p and T(phi psi) p.
double homomorphism_residual(const PowerSeries& phi, const PowerSeries& psi,
                             const PowerSeries& p);

}  // namespace hb
