#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "dgp/interval.hpp"
#include "dgp/kernels.hpp"

namespace dgp {

struct GpPosterior {
  Eigen::VectorXd mean;  // posterior mean on the probe locations
  Eigen::MatrixXd cov;   // posterior covariance on probe pairs
};

// Plain Gaussian-process regression on pooled data:
//   mean(x) = fbar(x) + k(x,X) [k(X,X) + noise_var I]^-1 (Y - fbar(X))
//   cov(x,x') = k(x,x') - k(x,X) [k(X,X) + noise_var I]^-1 k(X,x')
GpPosterior gp_reference(const Eigen::VectorXd& train_x, const Eigen::VectorXd& train_y,
                         const std::function<double(double)>& prior_mean,
                         const Kernel& prior_kernel, double noise_variance,
                         const Eigen::VectorXd& probe_x, const Interval& domain);

struct KalmanRun {
  std::vector<Eigen::VectorXd> predicted_mean;  // x_hat_{t+1|t}, t = 0..N-1
  std::vector<Eigen::MatrixXd> predicted_cov;   // S_{t+1|t}
};

// Combined update/prediction Kalman recursion from x_hat_{0|-1} = x0,
// S_{0|-1} = s0:
//   L_t       = S C_t^T (C_t S C_t^T + V)^-1
//   x_{t+1|t} = A x + A L_t (y_t - C_t x)
//   S_{t+1|t} = A S A^T - A L_t C_t S A^T + W
KalmanRun kalman_reference(const Eigen::MatrixXd& a,
                           const std::vector<Eigen::MatrixXd>& c,
                           const Eigen::MatrixXd& w, const Eigen::MatrixXd& v,
                           const Eigen::VectorXd& x0, const Eigen::MatrixXd& s0,
                           const std::vector<Eigen::VectorXd>& y);

}  // namespace dgp
