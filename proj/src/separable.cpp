#include "dgp/separable.hpp"

#include <stdexcept>
#include <utility>

#include "dgp/numeric.hpp"

namespace dgp {

namespace {

constexpr double kPsdTolerance = 1e-10;

void check_step_psd(const Eigen::MatrixXd& psi, const char* who) {
  if (min_eigenvalue(psi) < -kPsdTolerance) {
    throw std::runtime_error(std::string(who) +
                             ": coefficient covariance lost positive semidefiniteness");
  }
}

}  // namespace

SeparableDynamics::SeparableDynamics(Eigen::MatrixXd transition,
                                     Eigen::MatrixXd disturbance, Eigen::MatrixXd gram)
    : transition_(std::move(transition)),
      disturbance_(symmetrized(disturbance)),
      gram_(symmetrized(gram)) {
  const auto m = transition_.rows();
  if (transition_.cols() != m || disturbance_.rows() != m || disturbance_.cols() != m ||
      gram_.rows() != m || gram_.cols() != m) {
    throw std::invalid_argument("SeparableDynamics: all matrices must be M x M");
  }
  require_psd(disturbance_, kPsdTolerance, "SeparableDynamics disturbance");
  if (m > 0 && min_eigenvalue(gram_) <= 0.0) {
    throw std::invalid_argument("SeparableDynamics: Gram matrix must be positive definite");
  }
  transition_gram_ = transition_ * gram_;
}

SeparableState::SeparableState(std::shared_ptr<const BasisSet> basis, Eigen::VectorXd z,
                               Eigen::MatrixXd psi, int t, int l)
    : basis_(std::move(basis)), z_(std::move(z)), psi_(std::move(psi)), t_(t), l_(l) {}

SeparableState SeparableState::init(std::shared_ptr<const BasisSet> basis,
                                    const Eigen::MatrixXd& prior_cov,
                                    const Eigen::VectorXd& prior_mean) {
  if (!basis) throw std::invalid_argument("SeparableState: null basis");
  const int m = basis->size();
  if (prior_mean.size() != m || prior_cov.rows() != m || prior_cov.cols() != m) {
    throw std::invalid_argument("SeparableState: prior dimensions must match the basis");
  }
  Eigen::MatrixXd psi = symmetrized(prior_cov);
  if (min_eigenvalue(psi) < -kPsdTolerance) {
    throw std::invalid_argument("SeparableState: prior covariance is not PSD");
  }
  return SeparableState(std::move(basis), prior_mean, std::move(psi), 0, -1);
}

double SeparableState::mean_at(double x) const { return basis_->eval(x).dot(z_); }

double SeparableState::cov_at(double x, double xp) const {
  return basis_->eval(x).dot(psi_ * basis_->eval(xp));
}

Eigen::VectorXd SeparableState::mean_on(const Eigen::VectorXd& locations) const {
  return basis_matrix(*basis_, locations).transpose() * z_;
}

Eigen::VectorXd SeparableState::variance_on(const Eigen::VectorXd& locations) const {
  const Eigen::MatrixXd b = basis_matrix(*basis_, locations);
  return (b.array() * (psi_ * b).array()).colwise().sum();
}

SeparableState update(const SeparableState& state, const ObservationBatch& obs) {
  if (!state.awaiting_update()) {
    throw std::logic_error("separable update: step already conditioned; call predict first");
  }
  if (obs.size() == 0) {
    return SeparableState(state.basis_, state.z_, state.psi_, state.t_, state.t_);
  }
  if (obs.values.size() != obs.size() || obs.noise_cov.rows() != obs.size() ||
      obs.noise_cov.cols() != obs.size()) {
    throw std::invalid_argument("separable update: malformed observation batch");
  }

  const Eigen::MatrixXd b = basis_matrix(*state.basis_, obs.locations);  // M x p
  const Eigen::MatrixXd cross = state.psi_ * b;                          // Psi U(X)
  const Eigen::MatrixXd innovation_cov =
      symmetrized(b.transpose() * cross) + obs.noise_cov;
  const Eigen::MatrixXd gain =
      spd_solve(innovation_cov, cross.transpose(), "separable update").transpose();

  Eigen::VectorXd z = state.z_ + gain * (obs.values - b.transpose() * state.z_);
  Eigen::MatrixXd psi = symmetrized(state.psi_ - gain * cross.transpose());
  check_step_psd(psi, "separable update");
  return SeparableState(state.basis_, std::move(z), std::move(psi), state.t_, state.t_);
}

SeparableState predict(const SeparableState& state, const SeparableDynamics& dynamics) {
  if (state.data_time() != state.time()) {
    throw std::logic_error("separable predict: step not yet conditioned; call update first");
  }
  if (dynamics.dim() != state.dim()) {
    throw std::invalid_argument("separable predict: dynamics dimension mismatch");
  }
  const Eigen::MatrixXd& a = dynamics.transition_gram();
  Eigen::VectorXd z = a * state.z_;
  Eigen::MatrixXd psi =
      symmetrized(a * state.psi_ * a.transpose() + dynamics.disturbance());
  check_step_psd(psi, "separable predict");
  return SeparableState(state.basis_, std::move(z), std::move(psi), state.t_ + 1,
                        state.t_);
}

}  // namespace dgp
