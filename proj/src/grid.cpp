#include "dgp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dgp {

QuadratureGrid::QuadratureGrid(const Interval& domain, int node_count)
    : domain_(domain), dx_(domain.length() / node_count) {
  if (node_count < 1) {
    throw std::invalid_argument("QuadratureGrid: node count must be positive");
  }
  nodes_.resize(node_count);
  for (int i = 0; i < node_count; ++i) {
    nodes_(i) = domain.lo + (i + 0.5) * dx_;
  }
}

int QuadratureGrid::nearest_index(double x, bool strict) const {
  if (!std::isfinite(x)) {
    throw std::domain_error("QuadratureGrid: non-finite location");
  }
  const int n = size();
  const int raw = static_cast<int>(std::floor((x - domain_.lo) / dx_));
  const int idx = std::clamp(raw, 0, n - 1);
  if (strict && std::abs(x - nodes_(idx)) > 0.5 * dx_ * (1.0 + 1e-12)) {
    throw std::domain_error("QuadratureGrid: location too far from any node to snap");
  }
  return idx;
}

}  // namespace dgp
