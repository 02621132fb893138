#pragma once

#include <Eigen/Core>

namespace dgp {

// One time step of local measurements: values Y_t at locations X_t with
// noise covariance R_t (p x p, symmetric PSD).
struct ObservationBatch {
  Eigen::VectorXd locations;
  Eigen::VectorXd values;
  Eigen::MatrixXd noise_cov;

  int size() const { return static_cast<int>(locations.size()); }
};

// White measurement noise: R = noise_std^2 * I.
ObservationBatch make_batch(Eigen::VectorXd locations, Eigen::VectorXd values,
                            double noise_std);

ObservationBatch make_batch(Eigen::VectorXd locations, Eigen::VectorXd values,
                            Eigen::MatrixXd noise_cov);

}  // namespace dgp
