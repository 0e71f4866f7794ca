#pragma once

#include <string>
#include <vector>

#include "infscale/optimize.hpp"

namespace infscale {

enum class OutputFormat { csv, text };

// Everything one sweep invocation needs: which cells to run, the simulation
// settings, and how/where to write artifacts.
struct RunManifest {
  std::vector<ModelConfig> models;
  std::vector<ScenarioConstraints> scenarios;
  SimulationSettings settings;
  std::string output_dir;
  OutputFormat format = OutputFormat::csv;
  FeasibilityRule feasibility = FeasibilityRule::mean;
  KneeParam knee_param = KneeParam::index;
  int workers = 1;  // thread pool size; never affects numeric results
};

// One (model, scenario) cell of the sweep.
struct CellResult {
  ModelConfig model;
  ScenarioConstraints constraints;
  MetricsTable table;
  FeasibleSet feasible;
  CellSelections selections;
};

struct SweepResult {
  std::vector<CellResult> cells;  // model-major, scenario-minor order
};

// Run every model x scenario cell and write per-cell artifacts into
// output_dir: metrics_<model>_<scenario>.csv, selections_<model>_<scenario>
// (.csv or .json per format), plot3d_<model>_<scenario>.csv and
// plot2d_<model>_<scenario>.csv. Files are written to a temporary name and
// renamed, so readers never observe partial content. Throws ValidationError
// for an empty manifest and IoError when output_dir is unusable.
SweepResult run_sweep(const RunManifest& manifest);

// "k=4 / 0.96 / 0.09 / 10.8" for a selected point; "–" when the knee is
// undefined; "(infeasible)" when nothing qualifies.
std::string format_cell(const SelectionReport& report);

// Scenario-grouped summary: one block per scenario, one row per model, columns
// Model | Accuracy-Optimal | Cube-Optimal | Utopia-Closest | Knee-Point.
std::string print_table(const SweepResult& result);

// Per-cell artifact bodies (exposed for tests; run_sweep writes these).
std::string selections_csv(const CellSelections& sel);
std::string selections_json_doc(const CellSelections& sel);
std::string plot3d_csv(const MetricsTable& table, const ScenarioConstraints& constraints,
                       const FeasibleSet& feasible);
std::string plot2d_csv(const MetricsTable& table);

}  // namespace infscale
