#pragma once

#include <Eigen/Core>
#include <memory>
#include <utility>

#include "dgp/basis.hpp"
#include "dgp/interval.hpp"

namespace dgp {

// Bivariate kernel k(x, x') evaluated pointwise.
class Kernel {
 public:
  virtual ~Kernel() = default;

  virtual double operator()(double x, double xp) const = 0;

  // Whether k(x, x') == k(x', x); covariance kernels are symmetric.
  virtual bool symmetric() const { return true; }
};

// phi(a, sigma, d) = a * exp(-|d|^2 / (2 sigma^2)).
class SquaredExponentialKernel final : public Kernel {
 public:
  SquaredExponentialKernel(double amplitude, double length_scale);

  double amplitude() const { return amplitude_; }
  double length_scale() const { return length_scale_; }

  // Evaluation at lag d; throws std::invalid_argument for non-finite d.
  double at_distance(double d) const;

  double operator()(double x, double xp) const override { return at_distance(x - xp); }

 private:
  double amplitude_;
  double length_scale_;
};

// sigma_v^2 * delta(x - x'). Pointwise evaluation uses the indicator
// convention; per-batch measurement noise is always sigma_v^2 * I (each
// measurement draw is independent, also at repeated locations).
class WhiteNoiseKernel final : public Kernel {
 public:
  explicit WhiteNoiseKernel(double std_dev);

  double std_dev() const { return std_dev_; }
  double variance() const { return std_dev_ * std_dev_; }

  double operator()(double x, double xp) const override {
    return x == xp ? variance() : 0.0;
  }

 private:
  double std_dev_;
};

class ConstantKernel final : public Kernel {
 public:
  explicit ConstantKernel(double value) : value_(value) {}

  double value() const { return value_; }
  double operator()(double, double) const override { return value_; }

 private:
  double value_;
};

// k(x, x') = U(x)^T Lambda U(x'). Used both as a transition kernel (Lambda
// unrestricted) and as a covariance kernel (Lambda symmetric PSD).
class SeparableKernel final : public Kernel {
 public:
  SeparableKernel(std::shared_ptr<const BasisSet> basis, Eigen::MatrixXd coefficients);

  const std::shared_ptr<const BasisSet>& basis() const { return basis_; }
  const Eigen::MatrixXd& coefficients() const { return coefficients_; }

  double operator()(double x, double xp) const override;
  bool symmetric() const override { return symmetric_; }

  // Validates that the coefficient matrix is symmetric PSD (within tol on
  // the smallest eigenvalue), as required of covariance roles.
  void require_covariance(double tol = 1e-10) const;

 private:
  std::shared_ptr<const BasisSet> basis_;
  Eigen::MatrixXd coefficients_;
  bool symmetric_;
};

// n x m matrix with entry (i, j) = k(x_i, x'_j). Locations must lie inside
// the domain. Self-matrices of symmetric kernels are filled symmetrically,
// so they equal their transpose exactly.
Eigen::MatrixXd kernel_matrix(const Kernel& kernel, const Eigen::VectorXd& xs,
                              const Eigen::VectorXd& xps, const Interval& domain);

// Per-batch measurement noise matrix: sigma_v^2 * I, independent draws also
// at coincident locations.
Eigen::MatrixXd measurement_noise_matrix(const WhiteNoiseKernel& kernel,
                                         const Eigen::VectorXd& locations);

}  // namespace dgp
