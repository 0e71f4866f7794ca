// infscale: Monte Carlo sweeps over best-of-k inference scaling, with Pareto
// frontier extraction and operating-point selection per deployment scenario.
//
// Exit codes: 0 success, 2 invalid input (schema or values), 3 filesystem
// problem, 4 internal error. Failures emit one JSON object on stderr.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "infscale/sweep.hpp"

namespace {

int fail(int code, const std::string& kind, const std::string& message) {
  const nlohmann::json err{{"error", kind}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return code;
}

// Overlay entries onto presets by name (later entries win), used as the
// lookup pool for --model/--scenario filters.
template <typename T>
std::vector<T> overlay(std::vector<T> pool, const std::vector<T>& extra) {
  for (const T& e : extra) {
    auto it = std::find_if(pool.begin(), pool.end(),
                           [&](const T& x) { return x.name == e.name; });
    if (it != pool.end())
      *it = e;
    else
      pool.push_back(e);
  }
  return pool;
}

template <typename T>
std::vector<T> pick_named(const std::vector<T>& pool, const std::vector<std::string>& names,
                          const char* what) {
  std::vector<T> out;
  for (const std::string& name : names) {
    if (std::any_of(out.begin(), out.end(), [&](const T& x) { return x.name == name; }))
      continue;  // repeated flag value
    auto it = std::find_if(pool.begin(), pool.end(),
                           [&](const T& x) { return x.name == name; });
    if (it == pool.end())
      throw infscale::ValidationError(std::string("unknown ") + what + " '" + name + "'");
    out.push_back(*it);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace infscale;

  CLI::App app{
      "Best-of-k inference scaling: Monte Carlo metric sweeps, Pareto "
      "frontiers, and operating-point selection"};

  std::string config_path;
  std::vector<std::string> model_names;
  std::vector<std::string> scenario_names;
  std::uint64_t seed = 42;
  int trials = 300;
  int k_max = 128;
  int k_step = 4;
  int parallel = 4;
  std::string out_dir = "out";
  std::string format = "csv";
  double ci_level = 0.95;
  std::string feasibility = "mean";
  std::string knee_param = "index";
  int workers = 1;

  auto* opt_config =
      app.add_option("--config", config_path, "JSON config with models/scenarios/settings");
  app.add_option("--model", model_names,
                 "Model to include, preset or config-defined (repeatable; default: all)");
  app.add_option("--scenario", scenario_names,
                 "Scenario to include, preset or config-defined (repeatable; default: all)");
  auto* opt_seed = app.add_option("--seed", seed, "Master seed for the simulation streams");
  auto* opt_trials =
      app.add_option("--trials", trials, "Monte Carlo trials per k")->check(CLI::PositiveNumber);
  auto* opt_kmax =
      app.add_option("--k-max", k_max, "Largest inference count")->check(CLI::PositiveNumber);
  auto* opt_kstep =
      app.add_option("--k-step", k_step, "Inference count step")->check(CLI::PositiveNumber);
  auto* opt_parallel = app.add_option("--parallel", parallel,
                                      "Parallel factor P; overrides each model's default")
                           ->check(CLI::PositiveNumber);
  app.add_option("--out", out_dir, "Directory for artifact files");
  app.add_option("--format", format, "Selections artifact format")
      ->check(CLI::IsMember({"csv", "text"}));
  auto* opt_ci = app.add_option("--ci", ci_level, "Percentile interval level");
  app.add_option("--feasibility", feasibility, "Budget test applied to metrics")
      ->check(CLI::IsMember({"mean", "ci-upper"}));
  app.add_option("--knee-param", knee_param, "Knee curvature parameterization")
      ->check(CLI::IsMember({"index", "k"}));
  app.add_option("--workers", workers, "Worker threads; never changes numeric output")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "validation", e.what());
  }

  try {
    ConfigDocument doc;
    if (opt_config->count() > 0) doc = load_config_file(config_path);

    const auto model_pool = overlay(model_presets(), doc.models);
    const auto scenario_pool = overlay(scenario_presets(), doc.scenarios);

    RunManifest manifest;
    if (model_names.empty())
      manifest.models = doc.models.empty() ? model_pool : doc.models;
    else
      manifest.models = pick_named(model_pool, model_names, "model");
    if (scenario_names.empty())
      manifest.scenarios = doc.scenarios.empty() ? scenario_pool : doc.scenarios;
    else
      manifest.scenarios = pick_named(scenario_pool, scenario_names, "scenario");

    manifest.settings = doc.settings;
    if (opt_seed->count() > 0) manifest.settings.seed = seed;
    if (opt_trials->count() > 0) manifest.settings.trials_m = trials;
    if (opt_kmax->count() > 0 || opt_kstep->count() > 0 || manifest.settings.k_grid.empty())
      manifest.settings.k_grid = make_k_grid(k_max, k_step);
    if (opt_parallel->count() > 0) manifest.settings.parallel_p = parallel;
    if (opt_ci->count() > 0) manifest.settings.ci_level = ci_level;

    manifest.output_dir = out_dir;
    manifest.format = format == "text" ? OutputFormat::text : OutputFormat::csv;
    manifest.feasibility =
        feasibility == "ci-upper" ? FeasibilityRule::ci_upper : FeasibilityRule::mean;
    manifest.knee_param = knee_param == "k" ? KneeParam::k : KneeParam::index;
    manifest.workers = workers;

    const SweepResult result = run_sweep(manifest);
    std::fputs(print_table(result).c_str(), stdout);
    return 0;
  } catch (const SchemaError& e) {
    return fail(2, "schema", e.what());
  } catch (const ValidationError& e) {
    return fail(2, "validation", e.what());
  } catch (const IoError& e) {
    return fail(3, "io", e.what());
  } catch (const std::exception& e) {
    return fail(4, "internal", e.what());
  }
}
