#pragma once

// Brute-force reference implementations used only by tests. Written directly
// from the definitions, independent of the library code they check.

#include <vector>

#include "infscale/frontier.hpp"

namespace testsupport {

// Literal transcription of the dominance definition: no worse everywhere,
// strictly better somewhere.
inline bool oracle_dominates(const infscale::ParetoPoint& a, const infscale::ParetoPoint& b) {
  const bool no_worse = a.cost <= b.cost && a.time <= b.time && a.acc >= b.acc;
  const bool strictly_better = a.cost < b.cost || a.time < b.time || a.acc > b.acc;
  return no_worse && strictly_better;
}

// Quadratic pairwise scan keeping every point no other point dominates.
inline std::vector<infscale::ParetoPoint> oracle_frontier(
    const std::vector<infscale::ParetoPoint>& pts) {
  std::vector<infscale::ParetoPoint> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      if (oracle_dominates(pts[j], pts[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(pts[i]);
  }
  return keep;
}

inline bool same_point_list(const std::vector<infscale::ParetoPoint>& a,
                            const std::vector<infscale::ParetoPoint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].k != b[i].k || a[i].cost != b[i].cost || a[i].time != b[i].time ||
        a[i].acc != b[i].acc)
      return false;
  }
  return true;
}

}  // namespace testsupport
