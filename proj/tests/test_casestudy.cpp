#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hb/casestudy.hpp"
#include "oracles.hpp"

using hb::complex;

namespace {

hb::ProfileOptions short_levels() {
  hb::ProfileOptions o;
  o.n_min = 6;
  o.n_max = 10;
  return o;
}

int rank(hb::Containment c) {
  switch (c) {
    case hb::Containment::compactly_contained: return 0;
    case hb::Containment::contained: return 1;
    case hb::Containment::not_contained: return 2;
    case hb::Containment::inconclusive: return -1;
  }
  return -1;
}

}  // namespace

TEST_CASE("level circles are internally tangent at 1") {
  for (int level = 1; level <= 3; ++level) {
    const hb::LevelCircle c(std::exp(-static_cast<double>(level)));
    CHECK(c.s == doctest::Approx(level));
    CHECK(c.center + c.radius == 1.0);
    CHECK(c.center == doctest::Approx(c.s / (1.0 + c.s)));
    for (double psi : {1e-3, 0.5, 2.0, 3.1, 5.0}) {
      // Independent check through the complex closed form.
      const complex z = c.point(psi);
      CHECK(std::abs(z - (c.center + std::polar(c.radius, psi))) <= 1e-15);
      CHECK(std::norm(oracle::theta(z)) == doctest::Approx(c.t).epsilon(1e-9));
      CHECK(std::abs(hb::theta_modulus_sq(c.distances(psi)) - c.t) <= 1e-12 * c.t);
    }
  }
  CHECK_THROWS_AS(hb::LevelCircle(0.0), std::invalid_argument);
  CHECK_THROWS_AS(hb::LevelCircle(1.0), std::invalid_argument);
}

TEST_CASE("mu density values") {
  CHECK(hb::mu_density(1.0, true).at(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(hb::mu_density(1.0, false).at(0.0) == 1.0);
  const hb::LevelCircle c(std::exp(-1.0));
  for (double psi : {0.3, 1.7, 4.0}) {
    const complex z = c.point(psi);
    for (double cc : {0.5, 1.0, 1.5}) {
      const double expected = std::exp(-1.0) / std::pow(std::abs(1.0 - z), 2.0 * cc);
      CHECK(hb::mu_density(cc, true).at(z) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(hb::mu_density(1.0, true).at(1.0), std::domain_error);
  CHECK_THROWS_AS(hb::mu_density(0.0, true), std::invalid_argument);
}

TEST_CASE("level-set identities hold to rounding") {
  for (double c : {1.0, 2.0}) {
    for (int level = 1; level <= 3; ++level) {
      CHECK(hb::levelset_identity_check(c, std::exp(-static_cast<double>(level)), 100) <= 1e-12);
    }
  }
  CHECK(hb::levelset_identity_check(0.3, 0.5, 1000) <= 1e-12);
  CHECK_THROWS_AS(hb::levelset_identity_check(1.0, 2.0, 10), std::invalid_argument);
}

TEST_CASE("multiplier growth along level circles") {
  const auto at_one = hb::multiplier_growth_check(1.0, true);
  CHECK(at_one.trend == hb::GrowthTrend::constant);
  for (const auto& curve : at_one.curves) {
    // (1 - |z|^2)^{1/2} |theta phi_1| = sqrt(t s) along C_t.
    const double s = -std::log(curve.t);
    for (const auto& sample : curve.samples) {
      const double y = sample.one_minus_abs;
      CHECK(sample.scaled_modulus * std::sqrt(2.0 - y) ==
            doctest::Approx(std::sqrt(curve.t * s)).epsilon(1e-10));
    }
  }
  CHECK(hb::multiplier_growth_check(1.25, true).trend == hb::GrowthTrend::divergent);
  CHECK(hb::multiplier_growth_check(2.0, true).trend == hb::GrowthTrend::divergent);
  const auto quarter = hb::multiplier_growth_check(0.25, false);
  CHECK(quarter.trend == hb::GrowthTrend::vanishing);
  CHECK(quarter.curves.front().samples.back().scaled_modulus <
        quarter.curves.front().samples.front().scaled_modulus);
  CHECK(quarter.curves.size() == 3);
  CHECK(quarter.curves[0].samples.size() == 20);
}

TEST_CASE("experiment grids (short level range)") {
  const auto plain = hb::run_experiment({0.25, 0.5, 0.75}, false, short_levels());
  const auto with = hb::run_experiment({0.75, 1.0, 1.25}, true, short_levels());
  REQUIRE(plain.entries.size() == 3);
  REQUIRE(with.entries.size() == 3);
  const std::vector<hb::Containment> expected{hb::Containment::compactly_contained,
                                              hb::Containment::contained,
                                              hb::Containment::not_contained};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(plain.entries[i].verdict == expected[i]);
    CHECK(with.entries[i].verdict == expected[i]);
  }
  CHECK_FALSE(plain.flagged());
  CHECK_FALSE(with.flagged());

  // Larger c is never easier; the theta factor never hurts.
  for (const auto* e : {&plain, &with}) {
    for (std::size_t i = 1; i < 3; ++i) CHECK(rank(e->entries[i].verdict) >= rank(e->entries[i - 1].verdict));
  }
  CHECK(rank(with.entries[0].verdict) <= rank(plain.entries[2].verdict));
}

TEST_CASE("experiment CSV and JSON") {
  const auto e = hb::run_experiment({0.5}, false, short_levels());
  std::ostringstream os;
  hb::write_experiment_csv(os, e);
  std::istringstream lines(os.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "c,with_theta,n,max_ratio,slope,verdict");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 5);
  const auto j = hb::to_json(e);
  CHECK(j["experiments"][0]["verdict"] == "contained-not-compact");
  CHECK(j["flagged"] == false);
}
