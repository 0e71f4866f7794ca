#pragma once

#include <string>
#include <vector>

#include "infscale/config.hpp"
#include "infscale/stochastic.hpp"

namespace infscale {

struct CiPair {
  double lo = 0.0;
  double hi = 0.0;
};

// Monte Carlo summary of accuracy, cost, and latency at one inference count.
struct KMetrics {
  int k = 0;
  double mean_acc = 0.0, std_acc = 0.0;
  double mean_cost = 0.0, std_cost = 0.0;
  double mean_time = 0.0, std_time = 0.0;
  CiPair ci_acc, ci_cost, ci_time;  // percentile interval at ci_level
  int trials_m = 0;
};

// Per-k metrics over a full grid for one (model, scenario) cell.
struct MetricsTable {
  std::string model;
  std::string scenario;
  SimulationSettings settings;
  std::vector<KMetrics> rows;  // ordered by k, covering settings.k_grid
};

// Two-sided empirical percentile interval at the given level: quantiles
// (1-level)/2 and 1-(1-level)/2, linear interpolation between order
// statistics. Input order does not matter. Throws std::domain_error on an
// empty sample or a level outside (0,1).
CiPair percentile_ci(std::vector<double> samples, double level);

// Monte Carlo estimate at a single k (any k >= 1, grid membership not
// required). Trial j reads the length-k prefix of stream (seed, j), so
// estimates at different k share their common draws.
KMetrics estimate_k(const ModelConfig& model, int k, int p, int trials_m,
                    std::uint64_t seed, double ci_level = 0.95);

// One KMetrics row per grid entry. Each trial is walked once up to the
// largest grid k, recording at every grid boundary; rows are bitwise equal to
// standalone estimate_k calls. workers > 1 splits trials across threads;
// per-trial outcomes are reduced in trial order, so results are identical for
// every worker count. p comes from settings.parallel_p, else the model's
// p_default. Throws std::domain_error on an empty grid.
MetricsTable estimate_table(const ModelConfig& model, const SimulationSettings& settings,
                            const std::string& scenario_label = "", int workers = 1);

// Fixed-schema exports. Column order:
// k, mean_acc, std_acc, ci_acc_lo, ci_acc_hi, mean_cost, std_cost,
// ci_cost_lo, ci_cost_hi, mean_time, std_time, ci_time_lo, ci_time_hi,
// trials_m
std::string metrics_csv(const MetricsTable& table);
std::string metrics_json(const MetricsTable& table);

// Shared numeric formatting for all exported files: shortest representation
// that round-trips a double (%.17g trimmed), identical across runs.
std::string format_double(double v);

}  // namespace infscale
