#pragma once

#include <Eigen/Core>

#include "dgp/interval.hpp"

namespace dgp {

// Uniform midpoint grid: n nodes at the centers of n equal cells of the
// domain. Integrals are realized as midpoint Riemann sums on these nodes.
class QuadratureGrid {
 public:
  QuadratureGrid(const Interval& domain, int node_count);

  int size() const { return static_cast<int>(nodes_.size()); }
  double spacing() const { return dx_; }
  const Interval& domain() const { return domain_; }
  const Eigen::VectorXd& nodes() const { return nodes_; }
  double node(int i) const { return nodes_(i); }

  // Index of the node nearest to x. With strict=true the snap distance must
  // not exceed half a cell (any in-domain x qualifies); otherwise x is
  // clamped to the domain first.
  int nearest_index(double x, bool strict = true) const;

 private:
  Interval domain_;
  double dx_;
  Eigen::VectorXd nodes_;
};

}  // namespace dgp
