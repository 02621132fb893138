#pragma once

#include <Eigen/Core>
#include <vector>

#include "dgp/grid.hpp"
#include "dgp/kernels.hpp"
#include "dgp/observation.hpp"

namespace dgp {

// One Dirac component of the transition measure, sampled on the grid:
// targets[j] = s_i(x_j), weights[j] = b_i(x_j).
struct PointMass {
  Eigen::VectorXd targets;
  Eigen::VectorXd weights;
};

// Grid realization of the transition measure: row j of the matrix applies
// the measure anchored at node j to grid samples. The continuous-kernel
// part carries the quadrature weight dx; point masses snap their targets to
// the nearest node.
struct TransferOperator {
  Eigen::MatrixXd matrix;
};

TransferOperator build_transfer_operator(const Kernel* continuous_kernel,
                                         const std::vector<PointMass>& point_masses,
                                         const QuadratureGrid& grid);

// s(x) = x, b = 1: the identity dynamics (static-function special case).
PointMass identity_point_mass(const QuadratureGrid& grid);

// Point masses with s_i = node i and b_i(node j) = a(j, i), so that the
// assembled operator equals a (linear state dynamics on the grid nodes).
std::vector<PointMass> point_masses_from_matrix(const Eigen::MatrixXd& a,
                                                const QuadratureGrid& grid);

// Mean vector and covariance matrix of f_t on the grid nodes. The quadratic
// memory makes this the oracle path; initial states are capped at
// kDefaultNodeCap nodes unless a larger cap is passed explicitly.
class DenseState {
 public:
  static constexpr int kDefaultNodeCap = 2048;

  static DenseState init(const QuadratureGrid& grid, Eigen::VectorXd mean,
                         Eigen::MatrixXd cov, int node_cap = kDefaultNodeCap);

  const QuadratureGrid& grid() const { return grid_; }
  int time() const { return t_; }
  int data_time() const { return l_; }
  bool awaiting_update() const { return l_ == t_ - 1; }

  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }
  double mean_at_node(int i) const { return mean_(i); }
  double cov_at_nodes(int i, int j) const { return cov_(i, j); }

 private:
  DenseState(QuadratureGrid grid, Eigen::VectorXd mean, Eigen::MatrixXd cov,
             int t, int l);

  QuadratureGrid grid_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  int t_;
  int l_;

  friend DenseState dense_update(const DenseState&, const ObservationBatch&, bool);
  friend DenseState dense_predict(const DenseState&, const TransferOperator&,
                                  const Eigen::MatrixXd&);
};

// Measurement update at grid nodes (requires l = t-1). Observation locations
// snap to the nearest node; strict mode rejects locations farther than half
// a cell from any node.
DenseState dense_update(const DenseState& state, const ObservationBatch& obs,
                        bool strict_snap = true);

// Dynamics prediction (requires l = t): mean <- T mean,
// cov <- T cov T^T + Q_w grid matrix, symmetrized.
DenseState dense_predict(const DenseState& state, const TransferOperator& transfer,
                         const Eigen::MatrixXd& disturbance_grid);
DenseState dense_predict(const DenseState& state, const TransferOperator& transfer,
                         const Kernel& disturbance_kernel);

}  // namespace dgp
