#pragma once

#include <string>
#include <vector>

#include "dgp/simulator.hpp"

namespace dgp {

struct EstimatorConfig {
  std::string family = "fourier";
  std::vector<int> basis_sizes = {3, 9, 31, 91};  // M values for the sweep
  int quadrature_nodes = 2048;                    // n_q for projections
};

struct OutputConfig {
  std::string directory = "out";
  int probe_nodes = 625;
};

struct ExperimentConfig {
  GroundTruthConfig simulation;
  EstimatorConfig estimator;
  OutputConfig output;

  void validate() const;
};

// JSON config with sections "simulation", "estimator", "output". Every key
// is optional and defaults to the case-study values; unknown keys are
// rejected. Parse and validation errors carry the offending field.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace dgp
