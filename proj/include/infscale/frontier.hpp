#pragma once

#include <vector>

#include "infscale/config.hpp"
#include "infscale/montecarlo.hpp"

namespace infscale {

// How metrics are tested against scenario budgets. `mean` follows the
// feasibility definition (Monte Carlo means); `ci_upper` is the conservative
// variant using the unfavorable interval edge of each metric.
enum class FeasibilityRule { mean, ci_upper };

// Inference counts whose estimated metrics satisfy the scenario budgets.
struct FeasibleSet {
  std::vector<int> ks;  // ascending, subset of the source table's grid
  ScenarioConstraints constraints;
};

// One candidate in objective space with its budget-normalized coordinates.
struct ParetoPoint {
  int k = 0;
  double cost = 0.0;  // USD
  double time = 0.0;  // seconds
  double acc = 0.0;   // in [0,1]
  double norm_cost = 0.0;  // cost / c_max
  double norm_time = 0.0;  // time / t_max
  double norm_gap = 0.0;   // 1 - acc
};

ParetoPoint make_point(const KMetrics& row, const ScenarioConstraints& constraints);

// Filter table rows by the three budget inequalities, preserving k order.
// An empty result is valid (over-constrained scenario).
FeasibleSet feasible_set(const MetricsTable& table, const ScenarioConstraints& constraints,
                         FeasibilityRule rule = FeasibilityRule::mean);

// ParetoPoints for the feasible rows of a table, ordered by k.
std::vector<ParetoPoint> feasible_points(const MetricsTable& table, const FeasibleSet& feasible);

// True iff a is no worse than b on cost, time, and accuracy, and strictly
// better on at least one. Equal points do not dominate each other.
bool dominates(const ParetoPoint& a, const ParetoPoint& b);

// The points not dominated by any other, in stable input order. Duplicate
// triples are mutually non-dominating and are all kept.
std::vector<ParetoPoint> pareto_frontier(const std::vector<ParetoPoint>& points);

}  // namespace infscale
