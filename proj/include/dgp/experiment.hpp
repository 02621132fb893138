#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgp/config.hpp"
#include "dgp/projection.hpp"
#include "dgp/separable.hpp"
#include "dgp/simulator.hpp"

namespace dgp {

// Riemann L2 norm sqrt(sum_q diff_q^2 dx) of the estimation error.
double error_norm(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth,
                  double dx);

struct ErrorRecord {
  int t;
  int basis_size;
  double error;
};

// Kernel samples and prior-mean samples shared by every basis size of a
// sweep; computing them once keeps the per-M work to the projections.
struct EstimatorInputs {
  QuadratureGrid grid;
  Eigen::VectorXd mean_samples;   // fbar_0 on the grid
  Eigen::MatrixXd transition;     // k_f on grid pairs
  Eigen::MatrixXd initial_cov;    // Q_f
  Eigen::MatrixXd disturbance;    // Q_w (zero when disturbances are off)
};

EstimatorInputs make_estimator_inputs(const GroundTruthConfig& sim,
                                      const EstimatorConfig& est);

struct EstimatorSetup {
  std::shared_ptr<const BasisSet> basis;
  SeparableDynamics dynamics;
  SeparableState initial;
};

// Projects the prior mean and the three kernels onto a basis of the given
// size and assembles the separable filter for it.
EstimatorSetup build_estimator(const EstimatorInputs& inputs,
                               const std::string& family, int basis_size);

// Runs the separable filter over a trajectory for every configured M and
// records the Riemann 2-norm of e_{t|t} on the truth grid. Entries run in
// parallel; records are merged in M-major order.
std::vector<ErrorRecord> basis_sweep(const ExperimentConfig& config,
                                     const Trajectory& trajectory);

// Filtered mean/variance on a probe grid after each update, for one M.
struct EstimateTable {
  Eigen::VectorXd probe;
  std::vector<Eigen::VectorXd> mean;      // per t
  std::vector<Eigen::VectorXd> variance;  // per t
};

EstimateTable run_estimate(const ExperimentConfig& config, const Trajectory& trajectory,
                           int basis_size);

struct ReductionCheck {
  std::string name;
  double max_abs_diff;
  double tolerance;
  bool pass;
};

// Fixed-seed equivalence checks of the reductions: dense vs Kalman, dense
// vs GP, separable vs GP, separable vs dense.
std::vector<ReductionCheck> run_reduction_checks();
std::string format_reduction_report(const std::vector<ReductionCheck>& checks);

enum class RunMode { simulate, estimate, sweep, reduce_check };

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  bool no_disturbance = false;
};

// Executes one CLI mode: simulates as needed, writes the mode's CSV/report
// files into the output directory, and returns a process exit code.
int run(RunMode mode, ExperimentConfig config, const RunOverrides& overrides);

// CSV writers (17-significant-digit floats, byte-stable for fixed inputs).
std::string format_double(double v);
void write_truth_csv(const std::string& path, const Trajectory& trajectory);
void write_observations_csv(const std::string& path, const Trajectory& trajectory);
void write_errors_csv(const std::string& path, const std::vector<ErrorRecord>& records);
void write_estimate_csv(const std::string& path, const EstimateTable& table);

}  // namespace dgp
