#include "dgp/projection.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "dgp/numeric.hpp"

namespace dgp {

double ProjectedFunction::value(double x) const { return basis->eval(x).dot(coefficients); }

Eigen::VectorXd ProjectedFunction::values(const Eigen::VectorXd& locations) const {
  return basis_matrix(*basis, locations).transpose() * coefficients;
}

namespace {

// Solves through an eigendecomposition of the Gram matrix so that rank
// deficiency is detected instead of silently regularized.
class GramSolver {
 public:
  explicit GramSolver(const Eigen::MatrixXd& gram) : eig_(gram) {
    if (eig_.info() != Eigen::Success) {
      throw std::runtime_error("projection: Gram eigendecomposition failed");
    }
    const Eigen::VectorXd& values = eig_.eigenvalues();
    if (values.minCoeff() <= 1e-12 * std::max(values.maxCoeff(), 0.0)) {
      throw std::runtime_error("projection: Gram matrix is singular");
    }
  }

  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const {
    return eig_.eigenvectors() * (eig_.eigenvalues().cwiseInverse().asDiagonal() *
                                  (eig_.eigenvectors().transpose() * rhs));
  }

 private:
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_;
};

}  // namespace

ProjectedFunction project_function(const Eigen::VectorXd& samples,
                                   std::shared_ptr<const BasisSet> basis,
                                   const QuadratureGrid& grid) {
  if (!basis) throw std::invalid_argument("project_function: null basis");
  if (samples.size() != grid.size()) {
    throw std::invalid_argument("project_function: samples must match the grid");
  }
  const Eigen::MatrixXd b = basis_matrix(*basis, grid.nodes());
  const GramSolver solver(gram_matrix(*basis, grid));
  Eigen::VectorXd z = solver.solve(grid.spacing() * (b * samples));
  return ProjectedFunction{std::move(basis), std::move(z)};
}

SeparableKernel project_kernel(const Eigen::MatrixXd& kernel_grid,
                               std::shared_ptr<const BasisSet> basis,
                               const QuadratureGrid& grid, KernelRole role,
                               bool source_symmetric) {
  if (!basis) throw std::invalid_argument("project_kernel: null basis");
  if (kernel_grid.rows() != grid.size() || kernel_grid.cols() != grid.size()) {
    throw std::invalid_argument("project_kernel: kernel grid must be n_q x n_q");
  }
  const Eigen::MatrixXd b = basis_matrix(*basis, grid.nodes());
  const GramSolver solver(gram_matrix(*basis, grid));
  const double dx2 = grid.spacing() * grid.spacing();
  const Eigen::MatrixXd rhs = dx2 * (b * kernel_grid * b.transpose());
  // Normal equations of the product-basis least squares: G Lambda G = rhs.
  Eigen::MatrixXd lambda = solver.solve(solver.solve(rhs).transpose()).transpose();
  if (role == KernelRole::covariance) {
    lambda = clip_psd(symmetrized(lambda));
  } else if (source_symmetric) {
    lambda = symmetrized(lambda);
  }
  return SeparableKernel(std::move(basis), std::move(lambda));
}

SeparableKernel project_kernel(const Kernel& kernel,
                               std::shared_ptr<const BasisSet> basis,
                               const QuadratureGrid& grid, KernelRole role) {
  if (!basis) throw std::invalid_argument("project_kernel: null basis");
  const Eigen::MatrixXd kernel_grid =
      kernel_matrix(kernel, grid.nodes(), grid.nodes(), grid.domain());
  return project_kernel(kernel_grid, std::move(basis), grid, role, kernel.symmetric());
}

}  // namespace dgp
