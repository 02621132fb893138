#include "dgp/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dgp/numeric.hpp"

namespace dgp {

FourierBasis::FourierBasis(int size, const Interval& domain)
    : size_(size), domain_(domain), norm_(std::sqrt(2.0 / domain.length())) {
  if (size < 1) throw std::invalid_argument("FourierBasis: size must be >= 1");
}

Eigen::VectorXd FourierBasis::eval(double x) const {
  domain_.require_inside(x, "FourierBasis::eval");
  // Rescale to [-1, 1]; cos(j pi), sin(j pi) have unit L2 norm there and the
  // constant is 1/sqrt(2). norm_ restores unit norm on the actual domain.
  const double scaled = (2.0 * x - (domain_.lo + domain_.hi)) / domain_.length();
  Eigen::VectorXd u(size_);
  u(0) = norm_ / std::numbers::sqrt2;
  for (int j = 1; 2 * j - 1 < size_; ++j) {
    const double angle = j * std::numbers::pi * scaled;
    u(2 * j - 1) = norm_ * std::cos(angle);
    if (2 * j < size_) u(2 * j) = norm_ * std::sin(angle);
  }
  return u;
}

BinBasis::BinBasis(int size, const Interval& domain)
    : size_(size), domain_(domain), width_(domain.length() / size) {
  if (size < 1) throw std::invalid_argument("BinBasis: size must be >= 1");
}

int BinBasis::bin_index(double x) const {
  domain_.require_inside(x, "BinBasis::bin_index");
  const int raw = static_cast<int>(std::floor((x - domain_.lo) / width_));
  return std::clamp(raw, 0, size_ - 1);
}

Eigen::VectorXd BinBasis::eval(double x) const {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(size_);
  u(bin_index(x)) = 1.0 / std::sqrt(width_);
  return u;
}

std::shared_ptr<const BasisSet> make_basis(const std::string& family, int size,
                                           const Interval& domain) {
  if (family == "fourier") return std::make_shared<FourierBasis>(size, domain);
  if (family == "bins") return std::make_shared<BinBasis>(size, domain);
  throw std::invalid_argument("make_basis: unknown family '" + family + "'");
}

Eigen::MatrixXd basis_matrix(const BasisSet& basis, const Eigen::VectorXd& locations) {
  Eigen::MatrixXd b(basis.size(), locations.size());
  for (Eigen::Index j = 0; j < locations.size(); ++j) {
    b.col(j) = basis.eval(locations(j));
  }
  return b;
}

Eigen::MatrixXd gram_matrix(const BasisSet& basis, const QuadratureGrid& grid) {
  if (grid.size() < 2 * basis.size()) {
    throw std::invalid_argument("gram_matrix: grid has fewer than 2M nodes");
  }
  const Eigen::MatrixXd b = basis_matrix(basis, grid.nodes());
  return symmetrized(grid.spacing() * (b * b.transpose()));
}

}  // namespace dgp
