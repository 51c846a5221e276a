#include <doctest.h>

#include <random>

#include "hb/toeplitz.hpp"
#include "oracles.hpp"

using hb::complex;
using hb::CoToeplitz;
using hb::PowerSeries;

namespace {

PowerSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PowerSeries f(order);
  for (std::size_t k = 0; k <= order; ++k) f[k] = complex{u(rng), u(rng)};
  return f;
}

std::vector<complex> as_vector(const PowerSeries& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

}  // namespace

TEST_CASE("apply examples") {
  const complex lambda{2.0, -3.0};
  const PowerSeries p{1, complex{0, 1}, 4};
  const PowerSeries q = CoToeplitz(PowerSeries{lambda, 0, 0}).apply(p);
  for (std::size_t k = 0; k <= 2; ++k) CHECK(q[k] == std::conj(lambda) * p[k]);

  CHECK(CoToeplitz(hb::phi_c_series(1.0, 4)).apply(PowerSeries::monomial(2)) == PowerSeries{1, 1, 1});
  CHECK(CoToeplitz(PowerSeries{0, 1}).apply(PowerSeries::monomial(1)) == PowerSeries{1, 0});
}

TEST_CASE("apply matches the dense matrix and stays triangular") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const PowerSeries phi = random_series(rng, 40);
    const PowerSeries p = random_series(rng, 30);
    const PowerSeries q = CoToeplitz(phi).apply(p);
    CHECK(q.order() == p.degree());
    const auto expected = oracle::dense_toeplitz_apply(as_vector(phi), as_vector(p));
    for (std::size_t k = 0; k <= 30; ++k) CHECK(std::abs(q[k] - expected[k]) <= 1e-13);
  }
}

TEST_CASE("pairing identity is exact") {
  std::mt19937_64 rng(9);
  const PowerSeries phi = random_series(rng, 24);
  const CoToeplitz t(phi);
  for (std::size_t n = 0; n <= 24; ++n) {
    const PowerSeries q = t.apply(PowerSeries::monomial(n));
    for (std::size_t m = 0; m <= 24; ++m) {
      const complex expected = m <= n ? std::conj(phi[n - m]) : complex{};
      CHECK(q.coeff_or_zero(m) == expected);
    }
  }
}

TEST_CASE("insufficient symbol order is rejected") {
  CHECK_THROWS_AS(CoToeplitz(PowerSeries{1, 1}).apply(PowerSeries::monomial(3)), std::invalid_argument);
  CHECK_THROWS_AS(hb::monomial_hb_norm_sq(PowerSeries{1, 1}, 5), std::invalid_argument);
  // Trailing zeros beyond the symbol order are harmless.
  CHECK_NOTHROW(CoToeplitz(PowerSeries{1, 1}).apply(PowerSeries{1, 2, 0, 0}));
}

TEST_CASE("hb_norm_sq examples") {
  const PowerSeries p{1, complex{2, 1}, -3};
  CHECK(hb::hb_norm_sq(PowerSeries(4), p) == 1.0 + 5.0 + 9.0);
  const PowerSeries phi1 = hb::phi_c_series(1.0, 64);
  for (std::size_t n = 0; n <= 64; ++n) {
    CHECK(hb::hb_norm_sq(phi1, PowerSeries::monomial(n)) == static_cast<double>(n) + 2.0);
  }
  CHECK(hb::hb_norm_sq(hb::phi_c_series(0.5, 4), PowerSeries{1}) == 2.0);
}

TEST_CASE("monomial norm formula") {
  for (std::size_t n : {0u, 3u, 17u}) CHECK(hb::monomial_hb_norm_sq(PowerSeries(20), n) == 1.0);
  CHECK(hb::monomial_hb_norm_sq(hb::phi_c_series(1.0, 8), 5) == 7.0);
  for (const PowerSeries& phi :
       {hb::phi_c_series(0.5, 256), hb::phi_c_series(1.0, 256), hb::theta_series(256)}) {
    double previous = 0.0;
    for (std::size_t n = 0; n <= 256; ++n) {
      const double formula = hb::monomial_hb_norm_sq(phi, n);
      CHECK(std::abs(formula - hb::hb_norm_sq(phi, PowerSeries::monomial(n))) <= 1e-12 * formula);
      CHECK(formula >= previous);
      previous = formula;
    }
  }
}

TEST_CASE("monomial norms approach 1 + ||phi||^2 for square-summable phi") {
  const PowerSeries theta = hb::theta_series(4000);
  double h2 = 0.0;
  for (auto c : theta.coeffs()) h2 += std::norm(c);
  CHECK(hb::monomial_hb_norm_sq(theta, 4000) == doctest::Approx(1.0 + h2).epsilon(1e-14));
}

TEST_CASE("homomorphism residual") {
  const PowerSeries phi1 = hb::phi_c_series(1.0, 8);
  CHECK(hb::homomorphism_residual(phi1, phi1, PowerSeries::monomial(2)) <= 1e-13);
  // Hand computation: T(phi_1) T(phi_1) z^2 = 3 + 2z + z^2.
  const PowerSeries twice = CoToeplitz(phi1).apply(CoToeplitz(phi1).apply(PowerSeries::monomial(2)));
  CHECK(twice == PowerSeries{3, 2, 1});

  std::mt19937_64 rng(13);
  const PowerSeries one{1};
  for (int trial = 0; trial < 10; ++trial) {
    const PowerSeries phi = random_series(rng, 64);
    const PowerSeries p = random_series(rng, 64);
    CHECK(hb::homomorphism_residual(phi, one.truncated(64), p) == 0.0);
    CHECK(hb::homomorphism_residual(phi, random_series(rng, 64), p) <= 1e-11);
  }
}
