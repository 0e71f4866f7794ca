#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infscale/errors.hpp"

namespace infscale {

// One simulated model: linear per-token cost/latency coefficients plus the
// Gaussian parameters of its token lengths and single-pass accuracy.
struct ModelConfig {
  std::string name;
  double c_in = 0.0;   // USD per input token
  double c_out = 0.0;  // USD per output token
  double t_in = 0.0;   // seconds per input token
  double t_out = 0.0;  // seconds per output token
  double mu_len_in = 1024.0;
  double sigma_len_in = 64.0;
  double mu_len_out = 2048.0;
  double sigma_len_out = 128.0;
  double mu_acc = 0.0;
  double sigma_acc = 0.0;
  int p_default = 4;  // parallel factor used when settings do not override
};

// Budget triple defining the feasible region for one deployment scenario.
struct ScenarioConstraints {
  std::string name;
  double c_max = 0.0;  // USD
  double t_max = 0.0;  // seconds
  double a_min = 0.0;  // minimum acceptable mean accuracy
};

// Sweep-wide simulation parameters.
struct SimulationSettings {
  std::vector<int> k_grid;  // strictly increasing positive inference counts
  int trials_m = 300;
  std::uint64_t seed = 42;
  std::optional<int> parallel_p;  // overrides ModelConfig::p_default when set
  double ci_level = 0.95;
};

// Parsed contents of one config document.
struct ConfigDocument {
  int version = 1;
  std::vector<ModelConfig> models;
  std::vector<ScenarioConstraints> scenarios;
  SimulationSettings settings;
};

// Throw ValidationError naming the violated constraint.
void validate(const ModelConfig& m);
void validate(const ScenarioConstraints& s);
void validate(const SimulationSettings& s);

// The default sweep grid: 4, 8, ..., 128.
std::vector<int> default_k_grid();

// Grid from CLI-style bounds: step, 2*step, ..., up to k_max inclusive.
std::vector<int> make_k_grid(int k_max, int k_step);

// Built-in presets. Lookup is by exact name; unknown names return nullopt.
const std::vector<ModelConfig>& model_presets();
const std::vector<ScenarioConstraints>& scenario_presets();
std::optional<ModelConfig> model_preset(const std::string& name);
std::optional<ScenarioConstraints> scenario_preset(const std::string& name);

// JSON parsing/serialization. Parsers throw SchemaError for structural
// problems (naming the missing field) and ValidationError for value problems.
ModelConfig parse_model_config(const std::string& json_text);
ScenarioConstraints parse_scenario(const std::string& json_text);
ConfigDocument parse_config_text(const std::string& json_text);
ConfigDocument load_config_file(const std::string& path);  // IoError on read failure
std::string serialize_config(const ConfigDocument& doc);

}  // namespace infscale
