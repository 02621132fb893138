#include "dgp/observation.hpp"

#include <stdexcept>

#include "dgp/numeric.hpp"

namespace dgp {

ObservationBatch make_batch(Eigen::VectorXd locations, Eigen::VectorXd values,
                            Eigen::MatrixXd noise_cov) {
  const auto p = locations.size();
  if (values.size() != p) {
    throw std::invalid_argument("ObservationBatch: locations/values length mismatch");
  }
  if (noise_cov.rows() != p || noise_cov.cols() != p) {
    throw std::invalid_argument("ObservationBatch: noise covariance must be p x p");
  }
  if (p > 0) {
    require_psd(symmetrized(noise_cov), 1e-10, "ObservationBatch noise");
  }
  return ObservationBatch{std::move(locations), std::move(values), std::move(noise_cov)};
}

ObservationBatch make_batch(Eigen::VectorXd locations, Eigen::VectorXd values,
                            double noise_std) {
  if (noise_std < 0.0) {
    throw std::invalid_argument("ObservationBatch: noise std must be >= 0");
  }
  const auto p = locations.size();
  Eigen::MatrixXd noise = noise_std * noise_std * Eigen::MatrixXd::Identity(p, p);
  return make_batch(std::move(locations), std::move(values), std::move(noise));
}

}  // namespace dgp
