#include "infscale/optimize.hpp"

#include <array>
#include <cmath>

#include <json.hpp>

namespace infscale {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::acc_max: return "acc_max";
    case Strategy::cube: return "cube";
    case Strategy::utopia: return "utopia";
    case Strategy::knee: return "knee";
  }
  return "?";
}

const char* to_string(SelectionStatus s) {
  switch (s) {
    case SelectionStatus::ok: return "ok";
    case SelectionStatus::infeasible: return "infeasible";
    case SelectionStatus::knee_undefined: return "knee_undefined";
  }
  return "?";
}

GoodnessTriple goodness(const KMetrics& row, const ScenarioConstraints& constraints) {
  GoodnessTriple g;
  g.g_acc = row.mean_acc;
  g.g_cost = 1.0 - row.mean_cost / constraints.c_max;
  g.g_time = 1.0 - row.mean_time / constraints.t_max;
  return g;
}

double cube_volume(const GoodnessTriple& g) { return g.g_acc * g.g_cost * g.g_time; }

namespace {

bool in_feasible(const FeasibleSet& feasible, int k) {
  for (int x : feasible.ks)
    if (x == k) return true;
  return false;
}

SelectionReport report_at(Strategy strategy, const KMetrics& row, double diagnostic) {
  SelectionReport r;
  r.strategy = strategy;
  r.k_star = row.k;
  r.acc = row.mean_acc;
  r.cost = row.mean_cost;
  r.time = row.mean_time;
  r.diagnostic = diagnostic;
  r.status = SelectionStatus::ok;
  return r;
}

SelectionReport report_at(Strategy strategy, const ParetoPoint& p, double diagnostic) {
  SelectionReport r;
  r.strategy = strategy;
  r.k_star = p.k;
  r.acc = p.acc;
  r.cost = p.cost;
  r.time = p.time;
  r.diagnostic = diagnostic;
  r.status = SelectionStatus::ok;
  return r;
}

SelectionReport empty_report(Strategy strategy, SelectionStatus status) {
  SelectionReport r;
  r.strategy = strategy;
  r.status = status;
  return r;
}

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

Vec3 coords(const ParetoPoint& p) { return {p.norm_cost, p.norm_time, p.norm_gap}; }

}  // namespace

SelectionReport select_acc_max(const MetricsTable& table, const FeasibleSet& feasible) {
  const KMetrics* best = nullptr;
  for (const KMetrics& row : table.rows) {
    if (!in_feasible(feasible, row.k)) continue;
    if (best == nullptr || row.mean_acc > best->mean_acc) best = &row;
  }
  if (best == nullptr) return empty_report(Strategy::acc_max, SelectionStatus::infeasible);
  return report_at(Strategy::acc_max, *best, best->mean_acc);
}

SelectionReport select_cube_max(const MetricsTable& table, const FeasibleSet& feasible,
                                const ScenarioConstraints& constraints) {
  const KMetrics* best = nullptr;
  double best_volume = 0.0;
  for (const KMetrics& row : table.rows) {
    if (!in_feasible(feasible, row.k)) continue;
    const double v = cube_volume(goodness(row, constraints));
    if (best == nullptr || v > best_volume) {
      best = &row;
      best_volume = v;
    }
  }
  if (best == nullptr) return empty_report(Strategy::cube, SelectionStatus::infeasible);
  return report_at(Strategy::cube, *best, best_volume);
}

SelectionReport select_utopia(const std::vector<ParetoPoint>& frontier,
                              const ScenarioConstraints&) {
  const ParetoPoint* best = nullptr;
  double best_dist = 0.0;
  for (const ParetoPoint& p : frontier) {
    const double d = norm(coords(p));
    if (best == nullptr || d < best_dist || (d == best_dist && p.k < best->k)) {
      best = &p;
      best_dist = d;
    }
  }
  if (best == nullptr) return empty_report(Strategy::utopia, SelectionStatus::infeasible);
  return report_at(Strategy::utopia, *best, best_dist);
}

std::vector<double> knee_curvatures(const std::vector<ParetoPoint>& trajectory,
                                    KneeParam param) {
  std::vector<double> kappa;
  if (trajectory.size() < 3) return kappa;
  kappa.reserve(trajectory.size() - 2);
  for (std::size_t i = 1; i + 1 < trajectory.size(); ++i) {
    const Vec3 prev = coords(trajectory[i - 1]);
    const Vec3 here = coords(trajectory[i]);
    const Vec3 next = coords(trajectory[i + 1]);
    Vec3 d1, d2;
    if (param == KneeParam::index) {
      d1 = scale(sub(next, prev), 0.5);
      d2 = add(sub(next, here), sub(prev, here));
    } else {
      // Non-uniform three-point differences over the k spacing.
      const double h1 = static_cast<double>(trajectory[i].k - trajectory[i - 1].k);
      const double h2 = static_cast<double>(trajectory[i + 1].k - trajectory[i].k);
      const double denom = h1 * h2 * (h1 + h2);
      d1 = scale(add(add(scale(prev, -h2 * h2), scale(here, h2 * h2 - h1 * h1)),
                     scale(next, h1 * h1)),
                 1.0 / denom);
      d2 = scale(add(add(scale(prev, 2.0 * h2), scale(here, -2.0 * (h1 + h2))),
                     scale(next, 2.0 * h1)),
                 1.0 / denom);
    }
    const double speed = norm(d1);
    kappa.push_back(speed > 0.0 ? norm(cross(d1, d2)) / (speed * speed * speed) : 0.0);
  }
  return kappa;
}

SelectionReport select_knee(const std::vector<ParetoPoint>& frontier,
                            const ScenarioConstraints&, KneeParam param) {
  if (frontier.empty()) return empty_report(Strategy::knee, SelectionStatus::infeasible);
  if (frontier.size() < 3)
    return empty_report(Strategy::knee, SelectionStatus::knee_undefined);
  const std::vector<double> kappa = knee_curvatures(frontier, param);
  std::size_t best = 0;
  for (std::size_t i = 1; i < kappa.size(); ++i) {
    if (kappa[i] > kappa[best]) best = i;  // strict: earliest (smallest k) wins ties
  }
  if (!(kappa[best] >= knee_epsilon))
    return empty_report(Strategy::knee, SelectionStatus::knee_undefined);
  return report_at(Strategy::knee, frontier[best + 1], kappa[best]);
}

CellSelections select_all(const MetricsTable& table, const ScenarioConstraints& constraints,
                          FeasibilityRule rule, KneeParam param) {
  const FeasibleSet feasible = feasible_set(table, constraints, rule);
  const std::vector<ParetoPoint> points = feasible_points(table, feasible);
  const std::vector<ParetoPoint> frontier = pareto_frontier(points);
  CellSelections out;
  out.acc_max = select_acc_max(table, feasible);
  out.cube = select_cube_max(table, feasible, constraints);
  out.utopia = select_utopia(frontier, constraints);
  out.knee = select_knee(frontier, constraints, param);
  return out;
}

std::string selection_json(const SelectionReport& report) {
  nlohmann::json j;
  j["strategy"] = to_string(report.strategy);
  if (report.k_star)
    j["k_star"] = *report.k_star;
  else
    j["k_star"] = nullptr;
  j["status"] = to_string(report.status);
  j["acc"] = report.acc;
  j["cost"] = report.cost;
  j["time"] = report.time;
  j["diagnostic"] = report.diagnostic;
  return j.dump();
}

}  // namespace infscale
