#include "hb/boundary.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

namespace hb {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_grid_size(std::size_t size) {
  if (size < 8 || !is_power_of_two(size)) {
    throw std::invalid_argument("BoundaryGrid: size must be a power of two >= 8, got " +
                                std::to_string(size));
  }
}

// FFTW planning is not thread-safe; execution is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwPlan {
  fftw_plan plan = nullptr;
  ~FftwPlan() {
    if (plan) {
      std::lock_guard lock(fftw_planner_mutex());
      fftw_destroy_plan(plan);
    }
  }
};

/// Half spectrum Y_k = sum_j log w_j e^{-2 pi i j k / M}, k = 0..M/2.
std::vector<complex> log_modulus_spectrum(const BoundaryGrid& w) {
  const std::size_t m = w.size();
  std::vector<double> logs(m);
  for (std::size_t j = 0; j < m; ++j) {
    const complex v = w[j];
    if (v.imag() != 0.0 || !(v.real() > 0.0) || !std::isfinite(v.real())) {
      throw std::invalid_argument(
          "outer_from_modulus: modulus samples must be finite and positive");
    }
    logs[j] = std::log(v.real());
  }
  std::vector<complex> spectrum(m / 2 + 1);
  FftwPlan p;
  {
    std::lock_guard lock(fftw_planner_mutex());
    p.plan = fftw_plan_dft_r2c_1d(
        static_cast<int>(m), logs.data(),
        reinterpret_cast<fftw_complex*>(spectrum.data()), FFTW_ESTIMATE);
  }
  fftw_execute(p.plan);
  return spectrum;
}

}  // namespace

BoundaryGrid::BoundaryGrid(std::vector<complex> values)
    : BoundaryGrid(std::move(values), std::numeric_limits<double>::quiet_NaN()) {}

BoundaryGrid::BoundaryGrid(std::vector<complex> values, double offset)
    : values_(std::move(values)), offset_(offset) {
  check_grid_size(values_.size());
  if (std::isnan(offset_)) offset_ = default_offset(values_.size());
}

double BoundaryGrid::default_offset(std::size_t size) {
  return std::numbers::pi / static_cast<double>(size);
}

double BoundaryGrid::angle(std::size_t j, std::size_t size, double offset) {
  return 2.0 * std::numbers::pi * static_cast<double>(j) /
             static_cast<double>(size) +
         offset;
}

complex BoundaryGrid::node(std::size_t j, std::size_t size, double offset) {
  return std::polar(1.0, angle(j, size, offset));
}

std::pair<BoundaryGrid, BoundaryGrid> pythagorean_moduli(
    const BoundaryGrid& phi_modulus) {
  const std::size_t m = phi_modulus.size();
  std::vector<complex> a(m), b(m);
  for (std::size_t j = 0; j < m; ++j) {
    const complex v = phi_modulus[j];
    if (v.imag() != 0.0 || !(v.real() >= 0.0)) {
      throw std::invalid_argument(
          "pythagorean_moduli: samples must be nonnegative reals");
    }
    const double s = 1.0 / std::sqrt(1.0 + v.real() * v.real());
    a[j] = s;
    b[j] = v.real() * s;
  }
  return {BoundaryGrid(std::move(a), phi_modulus.offset()),
          BoundaryGrid(std::move(b), phi_modulus.offset())};
}

PowerSeries outer_from_modulus(const BoundaryGrid& w, std::size_t order) {
  const std::size_t m = w.size();
  if (order >= m / 2) {
    throw std::invalid_argument("outer_from_modulus: order must be < M/2");
  }
  const auto spectrum = log_modulus_spectrum(w);
  const double inv_m = 1.0 / static_cast<double>(m);
  // log O(z) = c_0 + 2 sum_{k>=1} c_k z^k with c_k the Fourier coefficients
  // of log w; the grid offset contributes the phase e^{-i k offset}.
  PowerSeries log_outer(order);
  log_outer[0] = spectrum[0].real() * inv_m;
  for (std::size_t k = 1; k <= order; ++k) {
    log_outer[k] = 2.0 * inv_m * spectrum[k] *
                   std::polar(1.0, -static_cast<double>(k) * w.offset());
  }
  return exp(log_outer);
}

BoundaryGrid outer_boundary_values(const BoundaryGrid& w) {
  const std::size_t m = w.size();
  const auto spectrum = log_modulus_spectrum(w);
  std::vector<complex> full(m);
  full[0] = spectrum[0];
  for (std::size_t k = 1; k < m / 2; ++k) full[k] = 2.0 * spectrum[k];
  full[m / 2] = spectrum[m / 2];

  std::vector<complex> log_values(m);
  FftwPlan p;
  {
    std::lock_guard lock(fftw_planner_mutex());
    p.plan = fftw_plan_dft_1d(static_cast<int>(m),
                              reinterpret_cast<fftw_complex*>(full.data()),
                              reinterpret_cast<fftw_complex*>(log_values.data()),
                              FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(p.plan);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (auto& v : log_values) v = std::exp(v * inv_m);
  return BoundaryGrid(std::move(log_values), w.offset());
}

PythagoreanError::PythagoreanError(double max_deviation, double tolerance)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "Pythagorean residual " << max_deviation
           << " exceeds tolerance " << tolerance;
        return os.str();
      }()),
      max_deviation_(max_deviation) {}

SymbolTriple symbol_from_phi(const Symbol& phi, const TripleOptions& opts) {
  check_grid_size(opts.grid_size);
  const std::size_t m = opts.grid_size;
  const double offset = BoundaryGrid::default_offset(m);
  std::vector<complex> samples(m);
  for (std::size_t j = 0; j < m; ++j) {
    samples[j] = phi.boundary_value(BoundaryGrid::angle(j, m, offset));
  }
  const BoundaryGrid phi_values(std::move(samples), offset);
  std::vector<complex> moduli(opts.grid_size);
  std::transform(phi_values.values().begin(), phi_values.values().end(),
                 moduli.begin(), [](complex v) { return complex{std::abs(v)}; });
  BoundaryGrid phi_modulus(std::move(moduli), phi_values.offset());

  auto [a_modulus, b_modulus] = pythagorean_moduli(phi_modulus);
  PowerSeries a = outer_from_modulus(a_modulus, opts.order);
  PowerSeries phi_series = phi.series(opts.order);
  PowerSeries b = multiply(phi_series, a, opts.order);

  BoundaryGrid a_boundary = outer_boundary_values(a_modulus);
  std::vector<complex> b_values(opts.grid_size);
  double residual = 0.0;
  for (std::size_t j = 0; j < opts.grid_size; ++j) {
    b_values[j] = phi_values[j] * a_boundary[j];
    residual = std::max(
        residual, std::abs(std::norm(a_boundary[j]) + std::norm(b_values[j]) - 1.0));
  }
  if (!(residual <= opts.tolerance)) throw PythagoreanError(residual, opts.tolerance);
  if (!(a[0].real() > 0.0) || a[0].imag() != 0.0) {
    throw std::logic_error("symbol_from_phi: a(0) is not real positive");
  }
  return SymbolTriple{phi,
                      std::move(phi_series),
                      std::move(a),
                      std::move(b),
                      std::move(phi_modulus),
                      std::move(a_boundary),
                      BoundaryGrid(std::move(b_values), phi_values.offset()),
                      residual};
}

void write_grid_csv(std::ostream& os, const BoundaryGrid& grid) {
  const auto old_precision = os.precision(17);
  os << "angle,re,im\n";
  for (std::size_t j = 0; j < grid.size(); ++j) {
    os << grid.angle(j) << ',' << grid[j].real() << ',' << grid[j].imag() << '\n';
  }
  os.precision(old_precision);
}

BoundaryGrid read_grid_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("angle", 0) != 0) {
    throw std::invalid_argument("read_grid_csv: missing 'angle,re,im' header");
  }
  std::vector<complex> values;
  double first_angle = 0.0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double angle = 0.0, re = 0.0, im = 0.0;
    if (!(row >> angle >> re >> im)) {
      throw std::invalid_argument("read_grid_csv: malformed row '" + line + "'");
    }
    if (values.empty()) first_angle = angle;
    values.emplace_back(re, im);
  }
  return BoundaryGrid(std::move(values), first_angle);
}

}  // namespace hb
