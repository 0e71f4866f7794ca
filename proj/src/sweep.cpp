#include "infscale/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace infscale {

namespace {

void write_file_atomic(const fs::path& target, const std::string& body) {
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << body;
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename '" + tmp.string() + "': " + ec.message());
}

CellResult run_cell(const ModelConfig& model, const ScenarioConstraints& scenario,
                    const RunManifest& manifest) {
  CellResult cell;
  cell.model = model;
  cell.constraints = scenario;
  cell.table = estimate_table(model, manifest.settings, scenario.name, manifest.workers);
  cell.feasible = feasible_set(cell.table, scenario, manifest.feasibility);
  cell.selections = select_all(cell.table, scenario, manifest.feasibility, manifest.knee_param);
  return cell;
}

void write_cell_files(const CellResult& cell, const RunManifest& manifest) {
  const fs::path dir(manifest.output_dir);
  const std::string stem = cell.model.name + "_" + cell.constraints.name;
  write_file_atomic(dir / ("metrics_" + stem + ".csv"), metrics_csv(cell.table));
  if (manifest.format == OutputFormat::csv) {
    write_file_atomic(dir / ("selections_" + stem + ".csv"), selections_csv(cell.selections));
  } else {
    write_file_atomic(dir / ("selections_" + stem + ".json"),
                      selections_json_doc(cell.selections));
  }
  write_file_atomic(dir / ("plot3d_" + stem + ".csv"),
                    plot3d_csv(cell.table, cell.constraints, cell.feasible));
  write_file_atomic(dir / ("plot2d_" + stem + ".csv"), plot2d_csv(cell.table));
}

}  // namespace

SweepResult run_sweep(const RunManifest& manifest) {
  if (manifest.models.empty()) throw ValidationError("manifest has no models");
  if (manifest.scenarios.empty()) throw ValidationError("manifest has no scenarios");
  for (const auto& m : manifest.models) validate(m);
  for (const auto& s : manifest.scenarios) validate(s);
  validate(manifest.settings);

  std::error_code ec;
  fs::create_directories(manifest.output_dir, ec);
  if (ec) throw IoError("cannot create output dir '" + manifest.output_dir + "': " + ec.message());

  // Cells run in model-major order; parallelism lives inside estimate_table,
  // whose per-trial reduction is worker-count independent, so the whole sweep
  // is reproducible byte for byte at any --workers value.
  SweepResult result;
  result.cells.reserve(manifest.models.size() * manifest.scenarios.size());
  for (const ModelConfig& model : manifest.models) {
    for (const ScenarioConstraints& scenario : manifest.scenarios) {
      result.cells.push_back(run_cell(model, scenario, manifest));
      write_cell_files(result.cells.back(), manifest);
    }
  }
  return result;
}

std::string format_cell(const SelectionReport& report) {
  if (report.status == SelectionStatus::knee_undefined) return "–";
  if (report.status == SelectionStatus::infeasible) return "(infeasible)";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "k=%d / %.2f / %.2f / %.1f", *report.k_star, report.acc,
                report.cost, report.time);
  return buf;
}

std::string print_table(const SweepResult& result) {
  // Group rows by scenario, preserving first-seen order.
  std::vector<std::string> scenario_order;
  for (const CellResult& c : result.cells) {
    if (std::find(scenario_order.begin(), scenario_order.end(), c.constraints.name) ==
        scenario_order.end())
      scenario_order.push_back(c.constraints.name);
  }

  std::string out;
  char line[256];
  for (const std::string& scenario : scenario_order) {
    const ScenarioConstraints* sc = nullptr;
    std::size_t width = 5;  // "Model"
    for (const CellResult& c : result.cells) {
      if (c.constraints.name == scenario) {
        sc = &c.constraints;
        width = std::max(width, c.model.name.size());
      }
    }
    std::snprintf(line, sizeof(line),
                  "scenario %s (c_max=%g USD, t_max=%g s, a_min=%g)\n", scenario.c_str(),
                  sc->c_max, sc->t_max, sc->a_min);
    out += line;
    out += "Model";
    out += std::string(width - 5, ' ');
    out += " | Accuracy-Optimal | Cube-Optimal | Utopia-Closest | Knee-Point\n";
    for (const CellResult& c : result.cells) {
      if (c.constraints.name != scenario) continue;
      out += c.model.name;
      out += std::string(width - c.model.name.size(), ' ');
      out += " | " + format_cell(c.selections.acc_max);
      out += " | " + format_cell(c.selections.cube);
      out += " | " + format_cell(c.selections.utopia);
      out += " | " + format_cell(c.selections.knee);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::string selections_csv(const CellSelections& sel) {
  std::string out = "strategy,k_star,status,acc,cost,time,diagnostic\n";
  for (const SelectionReport* r : {&sel.acc_max, &sel.cube, &sel.utopia, &sel.knee}) {
    out += to_string(r->strategy);
    out += ',';
    if (r->k_star) out += std::to_string(*r->k_star);
    out += ',';
    out += to_string(r->status);
    for (double v : {r->acc, r->cost, r->time, r->diagnostic}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string selections_json_doc(const CellSelections& sel) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SelectionReport* r : {&sel.acc_max, &sel.cube, &sel.utopia, &sel.knee}) {
    arr.push_back(nlohmann::json::parse(selection_json(*r)));
  }
  return arr.dump(2) + "\n";
}

std::string plot3d_csv(const MetricsTable& table, const ScenarioConstraints& constraints,
                       const FeasibleSet& feasible) {
  std::string out =
      "k,mean_cost,mean_time,mean_acc,norm_cost,norm_time,norm_acc_gap,"
      "cube_volume,feasible\n";
  for (const KMetrics& row : table.rows) {
    const ParetoPoint p = make_point(row, constraints);
    const bool ok =
        std::find(feasible.ks.begin(), feasible.ks.end(), row.k) != feasible.ks.end();
    out += std::to_string(row.k);
    for (double v : {p.cost, p.time, p.acc, p.norm_cost, p.norm_time, p.norm_gap,
                     cube_volume(goodness(row, constraints))}) {
      out += ',';
      out += format_double(v);
    }
    out += ok ? ",1\n" : ",0\n";
  }
  return out;
}

std::string plot2d_csv(const MetricsTable& table) {
  std::string out = "k,mean_acc,std_acc,ci_acc_lo,ci_acc_hi\n";
  for (const KMetrics& row : table.rows) {
    out += std::to_string(row.k);
    for (double v : {row.mean_acc, row.std_acc, row.ci_acc.lo, row.ci_acc.hi}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace infscale
