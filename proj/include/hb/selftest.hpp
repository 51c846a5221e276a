#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hb {

struct SelftestConfig {
  std::uint64_t seed = 20240917;
  /// Multiplies every numerical tolerance. Exact suites ignore it.
  double tolerance_scale = 1.0;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  bool exact = false;
  /// Worst observed deviation (or count of failures for sampled checks).
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// series-algebra, toeplitz-homomorphism, monomial-norm, pythagorean,
/// level-set, geometric-lemma, uniform-geometry, bergman-moments.
std::vector<SuiteResult> run_selftest(const SelftestConfig& config = {});

bool all_passed(const std::vector<SuiteResult>& results);
nlohmann::json to_json(const std::vector<SuiteResult>& results);

}  // namespace hb
