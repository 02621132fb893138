#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>

#include "dgp/grid.hpp"
#include "dgp/interval.hpp"

namespace dgp {

// Ordered family of M basis functions u_1..u_M on a common interval,
// orthonormal under the L2 inner product on that interval.
class BasisSet {
 public:
  virtual ~BasisSet() = default;

  virtual int size() const = 0;
  virtual const Interval& domain() const = 0;
  virtual std::string family() const = 0;

  // U(x) = [u_1(x), ..., u_M(x)]^T; throws std::domain_error off-domain.
  virtual Eigen::VectorXd eval(double x) const = 0;
};

// Constant function plus cosine/sine pairs of increasing frequency on the
// domain rescaled to [-1, 1], each scaled to unit L2 norm. Even sizes drop
// the last sine.
class FourierBasis final : public BasisSet {
 public:
  FourierBasis(int size, const Interval& domain);

  int size() const override { return size_; }
  const Interval& domain() const override { return domain_; }
  std::string family() const override { return "fourier"; }
  Eigen::VectorXd eval(double x) const override;

 private:
  int size_;
  Interval domain_;
  double norm_;  // sqrt(2 / |domain|); 1 on [-1, 1]
};

// M disjoint equal-width indicator functions scaled by 1/sqrt(width).
// Piecewise constant, exactly orthonormal.
class BinBasis final : public BasisSet {
 public:
  BinBasis(int size, const Interval& domain);

  int size() const override { return size_; }
  const Interval& domain() const override { return domain_; }
  std::string family() const override { return "bins"; }
  Eigen::VectorXd eval(double x) const override;

  double bin_width() const { return width_; }
  int bin_index(double x) const;

 private:
  int size_;
  Interval domain_;
  double width_;
};

// family is "fourier" or "bins".
std::shared_ptr<const BasisSet> make_basis(const std::string& family, int size,
                                           const Interval& domain);

// M x p matrix whose j-th column is U(x_j).
Eigen::MatrixXd basis_matrix(const BasisSet& basis, const Eigen::VectorXd& locations);

// Riemann-sum Gram matrix sum_q U(x_q) U(x_q)^T dx, symmetrized. Requires
// n_q >= 2M nodes; approaches the identity for orthonormal families.
Eigen::MatrixXd gram_matrix(const BasisSet& basis, const QuadratureGrid& grid);

}  // namespace dgp
