#include "dgp/numeric.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <string>

namespace dgp {

namespace {

void require_square(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
}

}  // namespace

double min_eigenvalue(const Eigen::MatrixXd& sym) {
  require_square(sym, "min_eigenvalue");
  if (sym.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("min_eigenvalue: eigenvalue computation failed");
  }
  return solver.eigenvalues().minCoeff();
}

void require_psd(const Eigen::MatrixXd& sym, double tol, const char* who) {
  const double lambda_min = min_eigenvalue(sym);
  if (lambda_min < -tol) {
    throw std::invalid_argument(std::string(who) + ": matrix is not PSD (min eigenvalue " +
                                std::to_string(lambda_min) + ")");
  }
}

Eigen::MatrixXd clip_psd(const Eigen::MatrixXd& sym, double error_floor) {
  require_square(sym, "clip_psd");
  if (sym.size() == 0) return sym;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("clip_psd: eigenvalue computation failed");
  }
  Eigen::VectorXd values = solver.eigenvalues();
  if (values.minCoeff() < error_floor) {
    throw std::runtime_error("clip_psd: eigenvalue " + std::to_string(values.minCoeff()) +
                             " below error floor; kernel is not a covariance");
  }
  values = values.cwiseMax(0.0);
  return symmetrized(solver.eigenvectors() * values.asDiagonal() *
                     solver.eigenvectors().transpose());
}

namespace {

constexpr double kFirstJitterScale = 1e-12;
constexpr double kLastJitterScale = 1e-6;

// Runs the jitter ladder: jitter values are scales times trace/n. Returns
// the first successful LLT.
Eigen::LLT<Eigen::MatrixXd> ladder_llt(const Eigen::MatrixXd& a, bool try_plain,
                                       const char* who) {
  require_square(a, who);
  const auto n = a.rows();
  const double mean_diag = n > 0 ? a.trace() / static_cast<double>(n) : 0.0;

  Eigen::LLT<Eigen::MatrixXd> llt;
  if (try_plain) {
    llt.compute(a);
    if (llt.info() == Eigen::Success) return llt;
  }
  for (double scale = kFirstJitterScale; scale <= kLastJitterScale * 1.001; scale *= 10.0) {
    const double jitter = scale * mean_diag;
    llt.compute(a + jitter * Eigen::MatrixXd::Identity(n, n));
    if (llt.info() == Eigen::Success) return llt;
  }
  throw std::runtime_error(std::string(who) +
                           ": Cholesky failed after jitter escalation");
}

}  // namespace

Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& a, const Eigen::MatrixXd& rhs,
                          const char* who) {
  if (a.rows() != rhs.rows()) {
    throw std::invalid_argument(std::string(who) + ": solve dimension mismatch");
  }
  if (a.size() == 0) return rhs;
  return ladder_llt(a, /*try_plain=*/true, who).solve(rhs);
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& cov, const char* who) {
  require_square(cov, who);
  if (cov.size() == 0 || cov.isZero(0.0)) {
    return Eigen::MatrixXd::Zero(cov.rows(), cov.cols());
  }
  return ladder_llt(cov, /*try_plain=*/false, who).matrixL();
}

}  // namespace dgp
