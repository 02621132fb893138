#include "dgp/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "dgp/dense.hpp"
#include "dgp/numeric.hpp"
#include "dgp/sampling.hpp"

namespace dgp {

namespace {

void validate_params(const SqExpParams& params, const char* who) {
  if (!std::isfinite(params.amplitude) || params.amplitude < 0.0) {
    throw std::invalid_argument(std::string(who) + ": amplitude must be >= 0");
  }
  if (params.amplitude > 0.0 &&
      (!std::isfinite(params.length_scale) || params.length_scale <= 0.0)) {
    throw std::invalid_argument(std::string(who) + ": length scale must be > 0");
  }
}

Eigen::MatrixXd grid_matrix_or_zero(const SqExpParams& params, const QuadratureGrid& grid) {
  if (const auto kernel = make_kernel(params)) {
    return kernel_matrix(*kernel, grid.nodes(), grid.nodes(), grid.domain());
  }
  return Eigen::MatrixXd::Zero(grid.size(), grid.size());
}

}  // namespace

std::unique_ptr<SquaredExponentialKernel> make_kernel(const SqExpParams& params) {
  validate_params(params, "make_kernel");
  if (params.amplitude == 0.0) return nullptr;
  return std::make_unique<SquaredExponentialKernel>(params.amplitude, params.length_scale);
}

double GroundTruthConfig::initial_mean_at(double x) const {
  if (initial_mean.amplitude == 0.0) return 0.0;
  const double z = x / initial_mean.length_scale;
  return initial_mean.amplitude * std::exp(-0.5 * z * z);
}

void GroundTruthConfig::validate() const {
  if (truth_nodes < 2) throw std::invalid_argument("GroundTruthConfig: truth_nodes must be >= 2");
  if (horizon < 0) throw std::invalid_argument("GroundTruthConfig: horizon must be >= 0");
  if (sensors_per_step < 0) {
    throw std::invalid_argument("GroundTruthConfig: sensors_per_step must be >= 0");
  }
  if (!std::isfinite(noise_std) || noise_std < 0.0) {
    throw std::invalid_argument("GroundTruthConfig: noise_std must be >= 0");
  }
  validate_params(transition, "GroundTruthConfig.transition");
  validate_params(initial_cov, "GroundTruthConfig.initial_cov");
  validate_params(disturbance_cov, "GroundTruthConfig.disturbance_cov");
  validate_params(initial_mean, "GroundTruthConfig.initial_mean");
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> draw_observations(
    const Eigen::VectorXd& truth, const QuadratureGrid& grid, int count,
    double noise_std, std::mt19937_64& rng) {
  if (truth.size() != grid.size()) {
    throw std::invalid_argument("draw_observations: truth must live on the grid");
  }
  if (count < 0) throw std::invalid_argument("draw_observations: count must be >= 0");

  std::uniform_real_distribution<double> uniform(grid.domain().lo, grid.domain().hi);
  Eigen::VectorXd locations(count);
  for (int j = 0; j < count; ++j) locations(j) = uniform(rng);

  Eigen::VectorXd values(count);
  const Eigen::VectorXd noise = noise_std == 0.0
                                    ? Eigen::VectorXd::Zero(count)
                                    : Eigen::VectorXd(noise_std *
                                                      standard_normal_vector(count, rng));
  for (int j = 0; j < count; ++j) {
    values(j) = truth(grid.nearest_index(locations(j))) + noise(j);
  }
  return {std::move(locations), std::move(values)};
}

Trajectory simulate(const GroundTruthConfig& config, std::mt19937_64& rng) {
  config.validate();
  const QuadratureGrid grid(config.domain, config.truth_nodes);
  const int n = grid.size();

  Eigen::VectorXd mean0(n);
  for (int i = 0; i < n; ++i) mean0(i) = config.initial_mean_at(grid.node(i));

  Eigen::VectorXd state =
      sample_gaussian_vector(mean0, grid_matrix_or_zero(config.initial_cov, grid), rng);

  const auto transition_kernel = make_kernel(config.transition);
  const Eigen::MatrixXd transfer =
      build_transfer_operator(transition_kernel.get(), {}, grid).matrix;

  // The disturbance factor is fixed once; per-step draws G * xi match
  // sample_gaussian_vector with the same generator stream.
  Eigen::MatrixXd disturbance_root;
  if (config.disturbances && config.disturbance_cov.amplitude > 0.0) {
    disturbance_root =
        psd_sqrt(grid_matrix_or_zero(config.disturbance_cov, grid), "simulate");
  }

  Trajectory trajectory{grid, {}, {}, {}};
  trajectory.truth.reserve(config.horizon + 1);
  trajectory.obs_locations.reserve(config.horizon + 1);
  trajectory.obs_values.reserve(config.horizon + 1);

  for (int t = 0; t <= config.horizon; ++t) {
    trajectory.truth.push_back(state);
    auto [locations, values] =
        draw_observations(state, grid, config.sensors_per_step, config.noise_std, rng);
    trajectory.obs_locations.push_back(std::move(locations));
    trajectory.obs_values.push_back(std::move(values));

    if (t < config.horizon) {
      state = transfer * state;
      if (disturbance_root.size() > 0) {
        state += disturbance_root * standard_normal_vector(n, rng);
      }
    }
  }
  return trajectory;
}

Trajectory simulate(const GroundTruthConfig& config) {
  std::mt19937_64 rng(config.seed);
  return simulate(config, rng);
}

}  // namespace dgp
