#include "dgp/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "dgp/numeric.hpp"

namespace dgp {

SquaredExponentialKernel::SquaredExponentialKernel(double amplitude, double length_scale)
    : amplitude_(amplitude), length_scale_(length_scale) {
  if (!std::isfinite(amplitude) || amplitude <= 0.0) {
    throw std::invalid_argument("SquaredExponentialKernel: amplitude must be > 0");
  }
  if (!std::isfinite(length_scale) || length_scale <= 0.0) {
    throw std::invalid_argument("SquaredExponentialKernel: length scale must be > 0");
  }
}

double SquaredExponentialKernel::at_distance(double d) const {
  if (!std::isfinite(d)) {
    throw std::invalid_argument("SquaredExponentialKernel: non-finite distance");
  }
  const double z = d / length_scale_;
  return amplitude_ * std::exp(-0.5 * z * z);
}

WhiteNoiseKernel::WhiteNoiseKernel(double std_dev) : std_dev_(std_dev) {
  if (!std::isfinite(std_dev) || std_dev < 0.0) {
    throw std::invalid_argument("WhiteNoiseKernel: std dev must be >= 0");
  }
}

SeparableKernel::SeparableKernel(std::shared_ptr<const BasisSet> basis,
                                 Eigen::MatrixXd coefficients)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (!basis_) throw std::invalid_argument("SeparableKernel: null basis");
  if (coefficients_.rows() != basis_->size() || coefficients_.cols() != basis_->size()) {
    throw std::invalid_argument("SeparableKernel: coefficient matrix must be M x M");
  }
  symmetric_ = coefficients_.size() == 0 ||
               (coefficients_ - coefficients_.transpose()).cwiseAbs().maxCoeff() == 0.0;
}

double SeparableKernel::operator()(double x, double xp) const {
  const Eigen::VectorXd ux = basis_->eval(x);
  const Eigen::VectorXd uxp = basis_->eval(xp);
  return ux.dot(coefficients_ * uxp);
}

void SeparableKernel::require_covariance(double tol) const {
  if (!symmetric_) {
    throw std::invalid_argument("SeparableKernel: covariance coefficients must be symmetric");
  }
  require_psd(coefficients_, tol, "SeparableKernel");
}

Eigen::MatrixXd kernel_matrix(const Kernel& kernel, const Eigen::VectorXd& xs,
                              const Eigen::VectorXd& xps, const Interval& domain) {
  for (Eigen::Index i = 0; i < xs.size(); ++i) domain.require_inside(xs(i), "kernel_matrix");
  for (Eigen::Index j = 0; j < xps.size(); ++j) domain.require_inside(xps(j), "kernel_matrix");

  Eigen::MatrixXd k(xs.size(), xps.size());
  const bool self = kernel.symmetric() && xs.size() == xps.size() &&
                    (xs.size() == 0 || xs == xps);
  if (self) {
    // Fill the upper triangle and mirror so the result is exactly symmetric.
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
      for (Eigen::Index j = i; j < xps.size(); ++j) {
        k(i, j) = kernel(xs(i), xps(j));
        k(j, i) = k(i, j);
      }
    }
  } else {
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
      for (Eigen::Index j = 0; j < xps.size(); ++j) {
        k(i, j) = kernel(xs(i), xps(j));
      }
    }
  }
  return k;
}

Eigen::MatrixXd measurement_noise_matrix(const WhiteNoiseKernel& kernel,
                                         const Eigen::VectorXd& locations) {
  for (Eigen::Index i = 0; i < locations.size(); ++i) {
    if (!std::isfinite(locations(i))) {
      throw std::invalid_argument("measurement_noise_matrix: non-finite location");
    }
  }
  return kernel.variance() *
         Eigen::MatrixXd::Identity(locations.size(), locations.size());
}

}  // namespace dgp
