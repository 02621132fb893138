#include "dgp/config.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("config: field '" + field + "': " + what);
}

void require_known_keys(const json& section, const std::string& name,
                        const std::set<std::string>& known) {
  if (!section.is_object()) fail(name, "must be an object");
  for (const auto& item : section.items()) {
    if (!known.contains(item.key())) fail(name + "." + item.key(), "unknown key");
  }
}

template <typename T>
void read(const json& section, const std::string& name, const char* key, T& out) {
  if (!section.contains(key)) return;
  try {
    out = section.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(name + "." + key, e.what());
  }
}

void read_params(const json& section, const std::string& name, const char* key,
                 SqExpParams& out) {
  if (!section.contains(key)) return;
  const std::string field = name + "." + key;
  require_known_keys(section.at(key), field, {"amplitude", "length_scale"});
  read(section.at(key), field, "amplitude", out.amplitude);
  read(section.at(key), field, "length_scale", out.length_scale);
}

void read_interval(const json& section, const std::string& name, const char* key,
                   Interval& out) {
  if (!section.contains(key)) return;
  const std::string field = name + "." + key;
  const json& value = section.at(key);
  if (!value.is_array() || value.size() != 2) fail(field, "must be [lo, hi]");
  try {
    out = Interval(value.at(0).get<double>(), value.at(1).get<double>());
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
}

void read_simulation(const json& section, GroundTruthConfig& sim) {
  require_known_keys(section, "simulation",
                     {"domain", "n_truth", "k_f", "q_f", "q_w", "mean_0", "sigma_v",
                      "horizon", "sensors_per_step", "seed", "disturbances"});
  read_interval(section, "simulation", "domain", sim.domain);
  read(section, "simulation", "n_truth", sim.truth_nodes);
  read_params(section, "simulation", "k_f", sim.transition);
  read_params(section, "simulation", "q_f", sim.initial_cov);
  read_params(section, "simulation", "q_w", sim.disturbance_cov);
  read_params(section, "simulation", "mean_0", sim.initial_mean);
  read(section, "simulation", "sigma_v", sim.noise_std);
  read(section, "simulation", "horizon", sim.horizon);
  read(section, "simulation", "sensors_per_step", sim.sensors_per_step);
  read(section, "simulation", "seed", sim.seed);
  read(section, "simulation", "disturbances", sim.disturbances);
}

void read_estimator(const json& section, EstimatorConfig& est) {
  require_known_keys(section, "estimator", {"family", "basis_sizes", "n_q"});
  read(section, "estimator", "family", est.family);
  read(section, "estimator", "basis_sizes", est.basis_sizes);
  read(section, "estimator", "n_q", est.quadrature_nodes);
}

void read_output(const json& section, OutputConfig& out) {
  require_known_keys(section, "output", {"directory", "probe_nodes"});
  read(section, "output", "directory", out.directory);
  read(section, "output", "probe_nodes", out.probe_nodes);
}

}  // namespace

void ExperimentConfig::validate() const {
  simulation.validate();
  if (estimator.family != "fourier" && estimator.family != "bins") {
    throw std::invalid_argument("config: field 'estimator.family': must be fourier or bins");
  }
  if (estimator.basis_sizes.empty()) {
    throw std::invalid_argument("config: field 'estimator.basis_sizes': must be non-empty");
  }
  for (int m : estimator.basis_sizes) {
    if (m < 1) throw std::invalid_argument("config: field 'estimator.basis_sizes': every M must be >= 1");
  }
  if (estimator.quadrature_nodes < 2) {
    throw std::invalid_argument("config: field 'estimator.n_q': must be >= 2");
  }
  if (output.probe_nodes < 1) {
    throw std::invalid_argument("config: field 'output.probe_nodes': must be >= 1");
  }
}

ExperimentConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  require_known_keys(root, "config", {"simulation", "estimator", "output"});

  ExperimentConfig config;
  if (root.contains("simulation")) read_simulation(root.at("simulation"), config.simulation);
  if (root.contains("estimator")) read_estimator(root.at("estimator"), config.estimator);
  if (root.contains("output")) read_output(root.at("output"), config.output);
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace dgp
