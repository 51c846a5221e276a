#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hb/series.hpp"
#include "hb/symbol.hpp"

namespace hb {

/// Samples of a function on the unit circle at the nodes
/// zeta_j = exp(i (2 pi j / M + offset)), j = 0..M-1.
///
/// M must be a power of two, at least 8. The default offset pi/M keeps the
/// point 1 strictly between two nodes.
class BoundaryGrid {
 public:
  explicit BoundaryGrid(std::vector<complex> values);
  BoundaryGrid(std::vector<complex> values, double offset);

  template <class F>
  static BoundaryGrid sample(std::size_t size, F&& f) {
    std::vector<complex> values(size);
    const double offset = default_offset(size);
    for (std::size_t j = 0; j < size; ++j) values[j] = f(node(j, size, offset));
    return BoundaryGrid(std::move(values), offset);
  }

  static double default_offset(std::size_t size);
  static complex node(std::size_t j, std::size_t size, double offset);
  static double angle(std::size_t j, std::size_t size, double offset);

  std::size_t size() const { return values_.size(); }
  double offset() const { return offset_; }
  double angle(std::size_t j) const { return angle(j, size(), offset_); }
  complex node(std::size_t j) const { return node(j, size(), offset_); }
  std::span<const complex> values() const { return values_; }
  complex operator[](std::size_t j) const { return values_[j]; }

 private:
  std::vector<complex> values_;
  double offset_;
};

/// |a| = (1 + |phi|^2)^{-1/2} and |b| = |phi| (1 + |phi|^2)^{-1/2} pointwise.
/// Throws std::invalid_argument if a sample is negative or not real.
std::pair<BoundaryGrid, BoundaryGrid> pythagorean_moduli(
    const BoundaryGrid& phi_modulus);

/// Taylor coefficients (through `order`) of the outer function whose boundary
/// modulus is w. Normalized so that the value at 0 is real and positive.
/// Throws std::invalid_argument on nonpositive samples or order >= M/2.
PowerSeries outer_from_modulus(const BoundaryGrid& w, std::size_t order);

/// Boundary values on the same nodes of the outer function with modulus w,
/// using every resolvable frequency of the grid.
BoundaryGrid outer_boundary_values(const BoundaryGrid& w);

/// Raised when |a|^2 + |b|^2 = 1 fails on the grid.
class PythagoreanError : public std::runtime_error {
 public:
  PythagoreanError(double max_deviation, double tolerance);
  double max_deviation() const { return max_deviation_; }

 private:
  double max_deviation_;
};

/// phi = b/a together with its Pythagorean pair.
struct SymbolTriple {
  Symbol phi;
  PowerSeries phi_series;
  PowerSeries a;
  PowerSeries b;
  BoundaryGrid phi_modulus;
  BoundaryGrid a_boundary;
  BoundaryGrid b_boundary;
  /// max_j | |a(zeta_j)|^2 + |b(zeta_j)|^2 - 1 |
  double max_residual;

  double a_at_zero() const { return a[0].real(); }
};

struct TripleOptions {
  std::size_t grid_size = std::size_t{1} << 14;
  std::size_t order = kDefaultOrder;
  double tolerance = 1e-8;
};

/// Builds a as the outer function with |a| = (1 + |phi|^2)^{-1/2} and
/// b = phi a (in series form, so inner factors of phi pass to b).
/// Throws PythagoreanError when the boundary residual exceeds the tolerance.
SymbolTriple symbol_from_phi(const Symbol& phi, const TripleOptions& opts = {});

/// CSV with header "angle,re,im"; one row per node.
void write_grid_csv(std::ostream& os, const BoundaryGrid& grid);
BoundaryGrid read_grid_csv(std::istream& is);

}  // namespace hb
