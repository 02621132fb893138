#include "dgp/dense.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dgp/numeric.hpp"

namespace dgp {

namespace {

constexpr double kPsdTolerance = 1e-10;

void check_step_psd(const Eigen::MatrixXd& cov, const char* who) {
  if (min_eigenvalue(cov) < -kPsdTolerance) {
    throw std::runtime_error(std::string(who) +
                             ": covariance lost positive semidefiniteness");
  }
}

}  // namespace

TransferOperator build_transfer_operator(const Kernel* continuous_kernel,
                                         const std::vector<PointMass>& point_masses,
                                         const QuadratureGrid& grid) {
  const int n = grid.size();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  if (continuous_kernel != nullptr) {
    t = grid.spacing() *
        kernel_matrix(*continuous_kernel, grid.nodes(), grid.nodes(), grid.domain());
  }
  for (const PointMass& mass : point_masses) {
    if (mass.targets.size() != n || mass.weights.size() != n) {
      throw std::invalid_argument("build_transfer_operator: point mass must be sampled on the grid");
    }
    for (int j = 0; j < n; ++j) {
      grid.domain().require_inside(mass.targets(j), "build_transfer_operator");
      t(j, grid.nearest_index(mass.targets(j))) += mass.weights(j);
    }
  }
  return TransferOperator{std::move(t)};
}

PointMass identity_point_mass(const QuadratureGrid& grid) {
  return PointMass{grid.nodes(), Eigen::VectorXd::Ones(grid.size())};
}

std::vector<PointMass> point_masses_from_matrix(const Eigen::MatrixXd& a,
                                                const QuadratureGrid& grid) {
  const int n = grid.size();
  if (a.rows() != n || a.cols() != n) {
    throw std::invalid_argument("point_masses_from_matrix: matrix must be n x n");
  }
  std::vector<PointMass> masses;
  masses.reserve(n);
  for (int i = 0; i < n; ++i) {
    masses.push_back(PointMass{Eigen::VectorXd::Constant(n, grid.node(i)), a.col(i)});
  }
  return masses;
}

DenseState::DenseState(QuadratureGrid grid, Eigen::VectorXd mean, Eigen::MatrixXd cov,
                       int t, int l)
    : grid_(std::move(grid)), mean_(std::move(mean)), cov_(std::move(cov)), t_(t), l_(l) {}

DenseState DenseState::init(const QuadratureGrid& grid, Eigen::VectorXd mean,
                            Eigen::MatrixXd cov, int node_cap) {
  const int n = grid.size();
  if (n > node_cap) {
    throw std::invalid_argument("DenseState: grid exceeds the node cap of " +
                                std::to_string(node_cap) +
                                " (the dense path is quadratic in memory)");
  }
  if (mean.size() != n || cov.rows() != n || cov.cols() != n) {
    throw std::invalid_argument("DenseState: mean/covariance must match the grid");
  }
  Eigen::MatrixXd sym = symmetrized(cov);
  if (min_eigenvalue(sym) < -kPsdTolerance) {
    throw std::invalid_argument("DenseState: prior covariance is not PSD");
  }
  return DenseState(grid, std::move(mean), std::move(sym), 0, -1);
}

DenseState dense_update(const DenseState& state, const ObservationBatch& obs,
                        bool strict_snap) {
  if (!state.awaiting_update()) {
    throw std::logic_error("dense update: step already conditioned; call predict first");
  }
  if (obs.size() == 0) {
    return DenseState(state.grid_, state.mean_, state.cov_, state.t_, state.t_);
  }

  std::vector<int> idx(obs.size());
  for (int j = 0; j < obs.size(); ++j) {
    idx[j] = state.grid_.nearest_index(obs.locations(j), strict_snap);
  }

  const Eigen::MatrixXd cross = state.cov_(Eigen::all, idx);  // n x p
  const Eigen::MatrixXd innovation_cov =
      symmetrized(state.cov_(idx, idx)) + obs.noise_cov;
  const Eigen::MatrixXd gain =
      spd_solve(innovation_cov, cross.transpose(), "dense update").transpose();

  Eigen::VectorXd mean =
      state.mean_ + gain * (obs.values - state.mean_(idx));
  Eigen::MatrixXd cov = symmetrized(state.cov_ - gain * cross.transpose());
  check_step_psd(cov, "dense update");
  return DenseState(state.grid_, std::move(mean), std::move(cov), state.t_, state.t_);
}

DenseState dense_predict(const DenseState& state, const TransferOperator& transfer,
                         const Eigen::MatrixXd& disturbance_grid) {
  if (state.data_time() != state.time()) {
    throw std::logic_error("dense predict: step not yet conditioned; call update first");
  }
  const int n = state.grid_.size();
  if (transfer.matrix.rows() != n || transfer.matrix.cols() != n ||
      disturbance_grid.rows() != n || disturbance_grid.cols() != n) {
    throw std::invalid_argument("dense predict: operator dimension mismatch");
  }
  Eigen::VectorXd mean = transfer.matrix * state.mean_;
  Eigen::MatrixXd cov = symmetrized(
      transfer.matrix * state.cov_ * transfer.matrix.transpose() + disturbance_grid);
  check_step_psd(cov, "dense predict");
  return DenseState(state.grid_, std::move(mean), std::move(cov), state.t_ + 1,
                    state.t_);
}

DenseState dense_predict(const DenseState& state, const TransferOperator& transfer,
                         const Kernel& disturbance_kernel) {
  const Eigen::MatrixXd q = kernel_matrix(disturbance_kernel, state.grid().nodes(),
                                          state.grid().nodes(), state.grid().domain());
  return dense_predict(state, transfer, q);
}

}  // namespace dgp
