#pragma once

#include <Eigen/Core>
#include <memory>

#include "dgp/basis.hpp"
#include "dgp/observation.hpp"

namespace dgp {

// Coefficient-space model of separable dynamics: transition Lambda,
// disturbance covariance Lambda_w, and the basis Gram matrix Lambda_U.
class SeparableDynamics {
 public:
  SeparableDynamics(Eigen::MatrixXd transition, Eigen::MatrixXd disturbance,
                    Eigen::MatrixXd gram);

  int dim() const { return static_cast<int>(transition_.rows()); }
  const Eigen::MatrixXd& transition() const { return transition_; }
  const Eigen::MatrixXd& disturbance() const { return disturbance_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  // Lambda * Lambda_U, the map applied to coefficients by one prediction.
  const Eigen::MatrixXd& transition_gram() const { return transition_gram_; }

 private:
  Eigen::MatrixXd transition_;
  Eigen::MatrixXd disturbance_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd transition_gram_;
};

// Posterior in coefficient space: mean U(x)^T z, covariance U(x)^T Psi U(x').
// States are immutable; update/predict return new states. The conditioning
// index l is t-1 after a prediction and t after an update; operations check
// the call order and refuse to run out of sequence.
class SeparableState {
 public:
  static SeparableState init(std::shared_ptr<const BasisSet> basis,
                             const Eigen::MatrixXd& prior_cov,
                             const Eigen::VectorXd& prior_mean);

  int dim() const { return static_cast<int>(z_.size()); }
  int time() const { return t_; }
  int data_time() const { return l_; }
  bool awaiting_update() const { return l_ == t_ - 1; }

  const std::shared_ptr<const BasisSet>& basis() const { return basis_; }
  const Eigen::VectorXd& coefficients() const { return z_; }
  const Eigen::MatrixXd& coefficient_cov() const { return psi_; }

  double mean_at(double x) const;
  double cov_at(double x, double xp) const;
  Eigen::VectorXd mean_on(const Eigen::VectorXd& locations) const;
  Eigen::VectorXd variance_on(const Eigen::VectorXd& locations) const;

 private:
  SeparableState(std::shared_ptr<const BasisSet> basis, Eigen::VectorXd z,
                 Eigen::MatrixXd psi, int t, int l);

  std::shared_ptr<const BasisSet> basis_;
  Eigen::VectorXd z_;
  Eigen::MatrixXd psi_;
  int t_;
  int l_;

  friend SeparableState update(const SeparableState&, const ObservationBatch&);
  friend SeparableState predict(const SeparableState&, const SeparableDynamics&);
};

// Measurement update (requires l = t-1):
//   Gamma = Psi B [B^T Psi B + R]^-1      with B = U(X_t)
//   z    <- z + Gamma (Y - B^T z)
//   Psi  <- Psi - Gamma B^T Psi, symmetrized
SeparableState update(const SeparableState& state, const ObservationBatch& obs);

// Dynamics prediction (requires l = t):
//   z   <- Lambda Lambda_U z
//   Psi <- Lambda Lambda_U Psi Lambda_U Lambda^T + Lambda_w, symmetrized
SeparableState predict(const SeparableState& state, const SeparableDynamics& dynamics);

}  // namespace dgp
