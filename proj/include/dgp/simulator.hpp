#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "dgp/grid.hpp"
#include "dgp/kernels.hpp"

namespace dgp {

// Squared-exponential parameters. amplitude = 0 disables the term (zero
// kernel / zero mean); otherwise both fields must be positive.
struct SqExpParams {
  double amplitude = 0.0;
  double length_scale = 1.0;
};

// nullptr when params.amplitude == 0.
std::unique_ptr<SquaredExponentialKernel> make_kernel(const SqExpParams& params);

// Ground-truth model and observation setup; defaults are the case-study
// parameters (domain [-1,1], 625-bin truth, p = 3, sigma_v = 0.1).
struct GroundTruthConfig {
  Interval domain{-1.0, 1.0};
  int truth_nodes = 625;
  SqExpParams transition{5.13, 0.07};       // k_f
  SqExpParams initial_cov{1.0, 0.7};        // Q_f
  SqExpParams disturbance_cov{0.35, 0.15};  // Q_w
  SqExpParams initial_mean{10.0, 0.05};     // fbar_0(x) = phi(a, sigma, x)
  double noise_std = 0.1;                   // sigma_v
  int horizon = 10;                         // N
  int sensors_per_step = 3;                 // p
  std::uint64_t seed = 0;
  bool disturbances = true;

  double initial_mean_at(double x) const;
  void validate() const;
};

// Ground truth on the truth grid plus per-step observation batches.
struct Trajectory {
  QuadratureGrid grid;
  std::vector<Eigen::VectorXd> truth;          // f_t, t = 0..N
  std::vector<Eigen::VectorXd> obs_locations;  // X_t
  std::vector<Eigen::VectorXd> obs_values;     // Y_t

  int horizon() const { return static_cast<int>(truth.size()) - 1; }
};

// p locations drawn i.i.d. uniformly on the domain; values read the truth at
// the nearest grid node plus white noise.
std::pair<Eigen::VectorXd, Eigen::VectorXd> draw_observations(
    const Eigen::VectorXd& truth, const QuadratureGrid& grid, int count,
    double noise_std, std::mt19937_64& rng);

// Samples f_0 ~ GP(fbar_0, Q_f) on the truth grid, then alternates drawing
// observations of f_t and propagating f_{t+1} = T f_t + w_t. Deterministic
// given the seed.
Trajectory simulate(const GroundTruthConfig& config, std::mt19937_64& rng);
Trajectory simulate(const GroundTruthConfig& config);  // seeds rng from config

}  // namespace dgp
