#pragma once

#include <Eigen/Core>
#include <random>

namespace dgp {

// n independent standard-normal draws from rng.
Eigen::VectorXd standard_normal_vector(int n, std::mt19937_64& rng);

// mean + G xi with G = psd_sqrt(cov) and xi standard normal. Deterministic
// given the generator state; a zero covariance returns the mean exactly.
Eigen::VectorXd sample_gaussian_vector(const Eigen::VectorXd& mean,
                                       const Eigen::MatrixXd& cov,
                                       std::mt19937_64& rng);

}  // namespace dgp
