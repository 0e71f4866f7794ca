#include "infscale/frontier.hpp"

namespace infscale {

ParetoPoint make_point(const KMetrics& row, const ScenarioConstraints& constraints) {
  ParetoPoint p;
  p.k = row.k;
  p.cost = row.mean_cost;
  p.time = row.mean_time;
  p.acc = row.mean_acc;
  p.norm_cost = row.mean_cost / constraints.c_max;
  p.norm_time = row.mean_time / constraints.t_max;
  p.norm_gap = 1.0 - row.mean_acc;
  return p;
}

FeasibleSet feasible_set(const MetricsTable& table, const ScenarioConstraints& constraints,
                         FeasibilityRule rule) {
  FeasibleSet out;
  out.constraints = constraints;
  for (const KMetrics& row : table.rows) {
    const bool ok =
        rule == FeasibilityRule::mean
            ? row.mean_cost <= constraints.c_max && row.mean_time <= constraints.t_max &&
                  row.mean_acc >= constraints.a_min
            : row.ci_cost.hi <= constraints.c_max && row.ci_time.hi <= constraints.t_max &&
                  row.ci_acc.lo >= constraints.a_min;
    if (ok) out.ks.push_back(row.k);
  }
  return out;
}

std::vector<ParetoPoint> feasible_points(const MetricsTable& table, const FeasibleSet& feasible) {
  std::vector<ParetoPoint> pts;
  pts.reserve(feasible.ks.size());
  std::size_t next = 0;
  for (const KMetrics& row : table.rows) {
    if (next < feasible.ks.size() && row.k == feasible.ks[next]) {
      pts.push_back(make_point(row, feasible.constraints));
      ++next;
    }
  }
  return pts;
}

bool dominates(const ParetoPoint& a, const ParetoPoint& b) {
  if (a.cost > b.cost || a.time > b.time || a.acc < b.acc) return false;
  return a.cost < b.cost || a.time < b.time || a.acc > b.acc;
}

std::vector<ParetoPoint> pareto_frontier(const std::vector<ParetoPoint>& points) {
  std::vector<ParetoPoint> front;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j != i && dominates(points[j], points[i])) dominated = true;
    }
    if (!dominated) front.push_back(points[i]);
  }
  return front;
}

}  // namespace infscale
