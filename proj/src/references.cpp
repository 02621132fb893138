#include "dgp/references.hpp"

#include <stdexcept>

#include "dgp/numeric.hpp"

namespace dgp {

GpPosterior gp_reference(const Eigen::VectorXd& train_x, const Eigen::VectorXd& train_y,
                         const std::function<double(double)>& prior_mean,
                         const Kernel& prior_kernel, double noise_variance,
                         const Eigen::VectorXd& probe_x, const Interval& domain) {
  if (train_x.size() != train_y.size()) {
    throw std::invalid_argument("gp_reference: data length mismatch");
  }
  const auto n = train_x.size();
  const auto m = probe_x.size();

  Eigen::VectorXd probe_mean(m);
  for (Eigen::Index i = 0; i < m; ++i) probe_mean(i) = prior_mean(probe_x(i));
  Eigen::MatrixXd probe_cov = kernel_matrix(prior_kernel, probe_x, probe_x, domain);

  if (n == 0) return GpPosterior{std::move(probe_mean), std::move(probe_cov)};

  Eigen::MatrixXd gram = kernel_matrix(prior_kernel, train_x, train_x, domain);
  gram += noise_variance * Eigen::MatrixXd::Identity(n, n);

  Eigen::VectorXd residual = train_y;
  for (Eigen::Index i = 0; i < n; ++i) residual(i) -= prior_mean(train_x(i));

  const Eigen::MatrixXd cross = kernel_matrix(prior_kernel, probe_x, train_x, domain);
  const Eigen::VectorXd alpha = spd_solve(gram, residual, "gp_reference");
  const Eigen::MatrixXd explained =
      spd_solve(gram, cross.transpose(), "gp_reference");

  GpPosterior posterior;
  posterior.mean = probe_mean + cross * alpha;
  posterior.cov = symmetrized(probe_cov - cross * explained);
  return posterior;
}

KalmanRun kalman_reference(const Eigen::MatrixXd& a,
                           const std::vector<Eigen::MatrixXd>& c,
                           const Eigen::MatrixXd& w, const Eigen::MatrixXd& v,
                           const Eigen::VectorXd& x0, const Eigen::MatrixXd& s0,
                           const std::vector<Eigen::VectorXd>& y) {
  const auto n = a.rows();
  if (a.cols() != n || w.rows() != n || w.cols() != n || x0.size() != n ||
      s0.rows() != n || s0.cols() != n) {
    throw std::invalid_argument("kalman_reference: state dimension mismatch");
  }
  if (c.size() != y.size()) {
    throw std::invalid_argument("kalman_reference: need one C_t per observation");
  }

  KalmanRun run;
  run.predicted_mean.reserve(y.size());
  run.predicted_cov.reserve(y.size());

  Eigen::VectorXd x = x0;
  Eigen::MatrixXd s = s0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    const Eigen::MatrixXd& ct = c[t];
    if (ct.cols() != n || ct.rows() != y[t].size() || v.rows() != ct.rows() ||
        v.cols() != ct.rows()) {
      throw std::invalid_argument("kalman_reference: observation dimension mismatch");
    }
    const Eigen::MatrixXd cross = s * ct.transpose();  // S C^T
    const Eigen::MatrixXd innovation_cov = symmetrized(ct * cross) + v;
    const Eigen::MatrixXd gain =
        spd_solve(innovation_cov, cross.transpose(), "kalman_reference").transpose();

    x = a * x + a * gain * (y[t] - ct * x);
    s = symmetrized(a * s * a.transpose() - a * gain * ct * s * a.transpose() + w);

    run.predicted_mean.push_back(x);
    run.predicted_cov.push_back(s);
  }
  return run;
}

}  // namespace dgp
