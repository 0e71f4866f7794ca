#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infscale/frontier.hpp"

namespace infscale {

enum class Strategy { acc_max, cube, utopia, knee };
enum class SelectionStatus { ok, infeasible, knee_undefined };

// Curve parameter for the knee finite differences: uniform spacing in the
// point index (default), or the raw k values (sensitivity alternative).
enum class KneeParam { index, k };

const char* to_string(Strategy s);
const char* to_string(SelectionStatus s);

// Below this curvature the trajectory counts as collinear and no knee exists.
inline constexpr double knee_epsilon = 1e-9;

// Normalized headroom under each budget; the product is the volume score.
struct GoodnessTriple {
  double g_acc = 0.0;   // mean accuracy
  double g_cost = 0.0;  // 1 - cost / c_max
  double g_time = 0.0;  // 1 - time / t_max
};

GoodnessTriple goodness(const KMetrics& row, const ScenarioConstraints& constraints);
double cube_volume(const GoodnessTriple& g);

// Outcome of one selection strategy. k_star is present exactly when status
// is ok; diagnostic carries the strategy's objective at the winner (max
// accuracy, max volume, min utopia distance, or max curvature).
struct SelectionReport {
  Strategy strategy = Strategy::acc_max;
  std::optional<int> k_star;
  double acc = 0.0;
  double cost = 0.0;
  double time = 0.0;
  double diagnostic = 0.0;
  SelectionStatus status = SelectionStatus::infeasible;
};

// Highest mean accuracy over the feasible set; ties to the smallest k.
SelectionReport select_acc_max(const MetricsTable& table, const FeasibleSet& feasible);

// Largest goodness product over the feasible set; ties to the smallest k.
SelectionReport select_cube_max(const MetricsTable& table, const FeasibleSet& feasible,
                                const ScenarioConstraints& constraints);

// Smallest Euclidean distance to the ideal corner in normalized coordinates
// (cost 0, time 0, accuracy 1); ties to the smallest k. Input order does not
// affect the result.
SelectionReport select_utopia(const std::vector<ParetoPoint>& frontier,
                              const ScenarioConstraints& constraints);

// Discrete curvature |p' x p''| / |p'|^3 of the normalized trajectory at each
// interior point, via central differences under the chosen parameterization.
// Returns size()-2 values (empty for fewer than 3 points).
std::vector<double> knee_curvatures(const std::vector<ParetoPoint>& trajectory,
                                    KneeParam param = KneeParam::index);

// Interior point of maximum curvature; ties to the smallest k. Fewer than 3
// frontier points or a collinear trajectory give status knee_undefined; an
// empty frontier is infeasible.
SelectionReport select_knee(const std::vector<ParetoPoint>& frontier,
                            const ScenarioConstraints& constraints,
                            KneeParam param = KneeParam::index);

// All four strategies for one cell, from the same table and constraints.
struct CellSelections {
  SelectionReport acc_max;
  SelectionReport cube;
  SelectionReport utopia;
  SelectionReport knee;
};

CellSelections select_all(const MetricsTable& table, const ScenarioConstraints& constraints,
                          FeasibilityRule rule = FeasibilityRule::mean,
                          KneeParam param = KneeParam::index);

// Stable-field-name serialization (strategy, k_star, status, acc, cost, time,
// diagnostic).
std::string selection_json(const SelectionReport& report);

}  // namespace infscale
