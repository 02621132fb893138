#pragma once

#include <Eigen/Core>
#include <memory>

#include "dgp/basis.hpp"
#include "dgp/kernels.hpp"

namespace dgp {

// Function represented by coefficients in a basis: x -> U(x)^T z.
struct ProjectedFunction {
  std::shared_ptr<const BasisSet> basis;
  Eigen::VectorXd coefficients;

  double value(double x) const;
  Eigen::VectorXd values(const Eigen::VectorXd& locations) const;
};

enum class KernelRole {
  covariance,  // result clipped to PSD
  transition,  // coefficients unrestricted
};

// Least-squares fit of grid samples in the basis, minimizing the Riemann
// L2 error sum_q (f(x_q) - U(x_q)^T z)^2 dx via the Gram normal equations.
ProjectedFunction project_function(const Eigen::VectorXd& samples,
                                   std::shared_ptr<const BasisSet> basis,
                                   const QuadratureGrid& grid);

// Least-squares fit of a kernel in the product basis U(x) (x) U(x'):
// Lambda minimizing sum_{q,q'} (k(x_q, x_q') - U(x_q)^T Lambda U(x_q'))^2.
// The result is symmetrized when the source kernel is symmetric and, for
// covariance roles, clipped to PSD.
SeparableKernel project_kernel(const Kernel& kernel,
                               std::shared_ptr<const BasisSet> basis,
                               const QuadratureGrid& grid, KernelRole role);

// Same, from a precomputed n_q x n_q matrix of kernel values on the grid.
SeparableKernel project_kernel(const Eigen::MatrixXd& kernel_grid,
                               std::shared_ptr<const BasisSet> basis,
                               const QuadratureGrid& grid, KernelRole role,
                               bool source_symmetric);

}  // namespace dgp
