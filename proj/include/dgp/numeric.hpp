#pragma once

#include <Eigen/Core>

namespace dgp {

inline Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Eigen::MatrixXd& sym);

// Throws std::invalid_argument unless min_eigenvalue(sym) >= -tol.
void require_psd(const Eigen::MatrixXd& sym, double tol, const char* who);

// Clamps negative eigenvalues of a symmetric matrix to zero. Eigenvalues
// below error_floor indicate a misconfigured kernel and throw instead.
Eigen::MatrixXd clip_psd(const Eigen::MatrixXd& sym, double error_floor = -1e-6);

// Solves a * x = rhs for symmetric positive (semi)definite a via Cholesky.
// Tries the plain factorization first, then adds jitter 1e-12..1e-6 times
// trace(a)/n, escalating by 10x, before giving up with std::runtime_error.
Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& a, const Eigen::MatrixXd& rhs,
                          const char* who);

// Lower-triangular factor g with g g^T = cov + jitter * I, using the same
// jitter ladder but starting at 1e-12 * trace/n (grid covariance matrices of
// smooth kernels are near-singular). A zero matrix yields a zero factor.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& cov, const char* who);

}  // namespace dgp
