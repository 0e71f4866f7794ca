#include "infscale/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace infscale {

using nlohmann::json;

void validate(const ModelConfig& m) {
  if (m.name.empty()) throw ValidationError("model name must be nonempty");
  auto nonneg = [&](double v, const char* field) {
    if (!(v >= 0.0))
      throw ValidationError("model '" + m.name + "': " + field + " must be >= 0");
  };
  nonneg(m.c_in, "c_in");
  nonneg(m.c_out, "c_out");
  nonneg(m.t_in, "t_in");
  nonneg(m.t_out, "t_out");
  nonneg(m.sigma_len_in, "sigma_len_in");
  nonneg(m.sigma_len_out, "sigma_len_out");
  nonneg(m.sigma_acc, "sigma_acc");
  if (!(m.mu_len_in >= 1.0))
    throw ValidationError("model '" + m.name + "': mu_len_in must be >= 1");
  if (!(m.mu_len_out >= 1.0))
    throw ValidationError("model '" + m.name + "': mu_len_out must be >= 1");
  if (!(m.mu_acc >= 0.0 && m.mu_acc <= 1.0))
    throw ValidationError("model '" + m.name + "': mu_acc must be in [0,1]");
  if (m.p_default < 1)
    throw ValidationError("model '" + m.name + "': p_default must be >= 1");
}

void validate(const ScenarioConstraints& s) {
  if (s.name.empty()) throw ValidationError("scenario name must be nonempty");
  if (!(s.c_max > 0.0))
    throw ValidationError("scenario '" + s.name + "': c_max must be > 0");
  if (!(s.t_max > 0.0))
    throw ValidationError("scenario '" + s.name + "': t_max must be > 0");
  if (!(s.a_min >= 0.0 && s.a_min <= 1.0))
    throw ValidationError("scenario '" + s.name + "': a_min must be in [0,1]");
}

void validate(const SimulationSettings& s) {
  int prev = 0;
  for (int k : s.k_grid) {
    if (k < 1) throw ValidationError("k_grid entries must be positive");
    if (k <= prev) throw ValidationError("k_grid must be strictly increasing");
    prev = k;
  }
  if (s.trials_m < 1) throw ValidationError("trials_m must be >= 1");
  if (s.parallel_p && *s.parallel_p < 1)
    throw ValidationError("parallel_p must be >= 1");
  if (!(s.ci_level > 0.0 && s.ci_level < 1.0))
    throw ValidationError("ci_level must be in (0,1)");
}

std::vector<int> make_k_grid(int k_max, int k_step) {
  if (k_step < 1) throw ValidationError("k_step must be >= 1");
  if (k_max < k_step) throw ValidationError("k_max must be >= k_step");
  std::vector<int> grid;
  for (int k = k_step; k <= k_max; k += k_step) grid.push_back(k);
  return grid;
}

std::vector<int> default_k_grid() { return make_k_grid(128, 4); }

namespace {

ModelConfig make_model(const std::string& name, double c_in, double c_out,
                       double t_in, double t_out, double mu_acc,
                       double sigma_acc) {
  ModelConfig m;
  m.name = name;
  m.c_in = c_in;
  m.c_out = c_out;
  m.t_in = t_in;
  m.t_out = t_out;
  m.mu_acc = mu_acc;
  m.sigma_acc = sigma_acc;
  // Shared length distributions and parallelism across all presets.
  m.mu_len_in = 1024.0;
  m.sigma_len_in = 64.0;
  m.mu_len_out = 2048.0;
  m.sigma_len_out = 128.0;
  m.p_default = 4;
  return m;
}

}  // namespace

const std::vector<ModelConfig>& model_presets() {
  static const std::vector<ModelConfig> presets = {
      make_model("gpt-5", 1.25e-6, 10.00e-6, 0.0005, 0.0050, 0.94, 0.02),
      make_model("gpt-5-mini", 0.25e-6, 2.00e-6, 0.00025, 0.0020, 0.92, 0.03),
      make_model("gpt-5-nano", 0.05e-6, 0.40e-6, 0.0001, 0.0010, 0.91, 0.04),
      make_model("nemotron-ultra-253b", 0.90e-6, 2.80e-6, 0.0010, 0.0100, 0.93, 0.05),
      make_model("nemotron-h-47b", 0.40e-6, 1.50e-6, 0.0004, 0.0040, 0.92, 0.06),
      make_model("nemotron-nano-9b-v2", 0.20e-6, 1.00e-6, 0.00012, 0.0012, 0.91, 0.07),
      make_model("qwen3-max", 0.90e-6, 2.40e-6, 0.0008, 0.0080, 0.90, 0.04),
      make_model("qwen3-next-80b-a3b", 0.50e-6, 1.25e-6, 0.0004, 0.0040, 0.89, 0.05),
      make_model("qwen3-30b-a3b", 0.35e-6, 0.90e-6, 0.00025, 0.0020, 0.88, 0.06),
  };
  return presets;
}

const std::vector<ScenarioConstraints>& scenario_presets() {
  static const std::vector<ScenarioConstraints> presets = {
      {"essay-feedback", 0.50, 60.0, 0.93},
      {"medical-ai", 0.95, 3600.0, 0.98},
      {"proposal-writing", 0.65, 1800.0, 0.96},
  };
  return presets;
}

std::optional<ModelConfig> model_preset(const std::string& name) {
  for (const auto& m : model_presets())
    if (m.name == name) return m;
  return std::nullopt;
}

std::optional<ScenarioConstraints> scenario_preset(const std::string& name) {
  for (const auto& s : scenario_presets())
    if (s.name == name) return s;
  return std::nullopt;
}

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("config is not valid JSON");
  return j;
}

double require_number(const json& j, const char* object, const char* field) {
  if (!j.contains(field))
    throw SchemaError(std::string(object) + " missing field '" + field + "'");
  if (!j[field].is_number())
    throw SchemaError(std::string(object) + " field '" + field + "' must be a number");
  return j[field].get<double>();
}

std::string require_string(const json& j, const char* object, const char* field) {
  if (!j.contains(field))
    throw SchemaError(std::string(object) + " missing field '" + field + "'");
  if (!j[field].is_string())
    throw SchemaError(std::string(object) + " field '" + field + "' must be a string");
  return j[field].get<std::string>();
}

ModelConfig model_from_json(const json& j) {
  ModelConfig m;
  m.name = require_string(j, "model", "name");
  m.c_in = require_number(j, "model", "c_in");
  m.c_out = require_number(j, "model", "c_out");
  m.t_in = require_number(j, "model", "t_in");
  m.t_out = require_number(j, "model", "t_out");
  m.mu_len_in = require_number(j, "model", "mu_len_in");
  m.sigma_len_in = require_number(j, "model", "sigma_len_in");
  m.mu_len_out = require_number(j, "model", "mu_len_out");
  m.sigma_len_out = require_number(j, "model", "sigma_len_out");
  m.mu_acc = require_number(j, "model", "mu_acc");
  m.sigma_acc = require_number(j, "model", "sigma_acc");
  // p_default may be omitted; the shared default of 4 applies.
  m.p_default = j.contains("p_default") ? j["p_default"].get<int>() : 4;
  validate(m);
  return m;
}

ScenarioConstraints scenario_from_json(const json& j) {
  ScenarioConstraints s;
  s.name = require_string(j, "scenario", "name");
  s.c_max = require_number(j, "scenario", "c_max");
  s.t_max = require_number(j, "scenario", "t_max");
  s.a_min = require_number(j, "scenario", "a_min");
  validate(s);
  return s;
}

SimulationSettings settings_from_json(const json& j) {
  SimulationSettings s;
  s.k_grid = default_k_grid();
  if (j.contains("k_grid")) {
    if (!j["k_grid"].is_array())
      throw SchemaError("settings field 'k_grid' must be an array");
    s.k_grid = j["k_grid"].get<std::vector<int>>();
  }
  if (j.contains("trials_m")) s.trials_m = j["trials_m"].get<int>();
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("parallel_p")) s.parallel_p = j["parallel_p"].get<int>();
  if (j.contains("ci_level")) s.ci_level = j["ci_level"].get<double>();
  validate(s);
  return s;
}

json model_to_json(const ModelConfig& m) {
  return json{{"name", m.name},
              {"c_in", m.c_in},
              {"c_out", m.c_out},
              {"t_in", m.t_in},
              {"t_out", m.t_out},
              {"mu_len_in", m.mu_len_in},
              {"sigma_len_in", m.sigma_len_in},
              {"mu_len_out", m.mu_len_out},
              {"sigma_len_out", m.sigma_len_out},
              {"mu_acc", m.mu_acc},
              {"sigma_acc", m.sigma_acc},
              {"p_default", m.p_default}};
}

json scenario_to_json(const ScenarioConstraints& s) {
  return json{{"name", s.name}, {"c_max", s.c_max}, {"t_max", s.t_max}, {"a_min", s.a_min}};
}

}  // namespace

ModelConfig parse_model_config(const std::string& json_text) {
  return model_from_json(parse_json(json_text));
}

ScenarioConstraints parse_scenario(const std::string& json_text) {
  return scenario_from_json(parse_json(json_text));
}

ConfigDocument parse_config_text(const std::string& json_text) {
  const json j = parse_json(json_text);
  ConfigDocument doc;
  if (!j.contains("version"))
    throw SchemaError("config missing field 'version'");
  doc.version = j["version"].get<int>();
  if (doc.version != 1)
    throw ValidationError("unsupported config version " + std::to_string(doc.version));
  if (j.contains("models"))
    for (const auto& jm : j["models"]) doc.models.push_back(model_from_json(jm));
  if (j.contains("scenarios"))
    for (const auto& js : j["scenarios"]) doc.scenarios.push_back(scenario_from_json(js));
  doc.settings = settings_from_json(j.contains("settings") ? j["settings"] : json::object());
  return doc;
}

ConfigDocument load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading config file '" + path + "'");
  return parse_config_text(buf.str());
}

std::string serialize_config(const ConfigDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["models"] = json::array();
  for (const auto& m : doc.models) j["models"].push_back(model_to_json(m));
  j["scenarios"] = json::array();
  for (const auto& s : doc.scenarios) j["scenarios"].push_back(scenario_to_json(s));
  json js;
  js["k_grid"] = doc.settings.k_grid;
  js["trials_m"] = doc.settings.trials_m;
  js["seed"] = doc.settings.seed;
  if (doc.settings.parallel_p) js["parallel_p"] = *doc.settings.parallel_p;
  js["ci_level"] = doc.settings.ci_level;
  j["settings"] = js;
  return j.dump(2) + "\n";
}

}  // namespace infscale
