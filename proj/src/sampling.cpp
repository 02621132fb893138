#include "dgp/sampling.hpp"

#include <stdexcept>

#include "dgp/numeric.hpp"

namespace dgp {

Eigen::VectorXd standard_normal_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd xi(n);
  for (int i = 0; i < n; ++i) xi(i) = normal(rng);
  return xi;
}

Eigen::VectorXd sample_gaussian_vector(const Eigen::VectorXd& mean,
                                       const Eigen::MatrixXd& cov,
                                       std::mt19937_64& rng) {
  if (cov.rows() != cov.cols() || cov.rows() != mean.size()) {
    throw std::invalid_argument("sample_gaussian_vector: covariance size mismatch");
  }
  const Eigen::MatrixXd root = psd_sqrt(cov, "sample_gaussian_vector");
  return mean + root * standard_normal_vector(static_cast<int>(mean.size()), rng);
}

}  // namespace dgp
