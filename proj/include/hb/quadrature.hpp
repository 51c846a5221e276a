#pragma once

#include <cstddef>
#include <vector>

namespace hb {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point rule from Newton iteration on P_n; exact for degree 2n - 1.
GaussRule gauss_legendre(std::size_t n);

}  // namespace hb
