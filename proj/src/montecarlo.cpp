#include "infscale/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "infscale/numerics.hpp"

namespace infscale {

CiPair percentile_ci(std::vector<double> samples, double level) {
  if (samples.empty()) throw std::domain_error("percentile_ci: empty sample");
  if (!(level > 0.0 && level < 1.0))
    throw std::domain_error("percentile_ci: level must be in (0,1)");
  std::sort(samples.begin(), samples.end());
  const auto quantile = [&](double q) {
    const double h = q * static_cast<double>(samples.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= samples.size()) return samples.back();
    const double frac = h - static_cast<double>(lo);
    return samples[lo] + frac * (samples[lo + 1] - samples[lo]);
  };
  const double alpha = (1.0 - level) / 2.0;
  return {quantile(alpha), quantile(1.0 - alpha)};
}

namespace {

struct TrialRecord {
  double acc = 0.0;
  double cost = 0.0;
  double time = 0.0;
};

// Walk trials [t_begin, t_end) once up to the largest requested k, recording
// the running aggregate at every requested boundary. Identical arithmetic to
// run_trial at each boundary, so a record equals the standalone trial result.
void walk_trials(const ModelConfig& model, const std::vector<int>& ks, int p,
                 std::uint64_t seed, int t_begin, int t_end,
                 std::vector<TrialRecord>& out) {
  const auto n_rows = ks.size();
  const int k_last = ks.back();
  for (int t = t_begin; t < t_end; ++t) {
    TrialStream stream(seed, static_cast<std::uint64_t>(t));
    double best = 0.0;
    NeumaierSum cost, latency;
    std::size_t r = 0;
    for (int i = 1; i <= k_last && r < n_rows; ++i) {
      const InferenceDraw d = sample_inference(stream, model);
      best = std::max(best, d.accuracy);
      cost.add(d.cost);
      latency.add(d.latency);
      stream.next_inference();
      if (i == ks[r]) {
        out[static_cast<std::size_t>(t) * n_rows + r] = {
            best, cost.total(), latency.total() / static_cast<double>(p)};
        ++r;
      }
    }
  }
}

std::vector<KMetrics> estimate_rows(const ModelConfig& model, const std::vector<int>& ks,
                                    int p, int trials_m, std::uint64_t seed,
                                    double ci_level, int workers) {
  if (ks.empty()) throw std::domain_error("estimate: empty k grid");
  int prev = 0;
  for (int k : ks) {
    if (k <= prev) throw std::domain_error("estimate: k grid must be strictly increasing and positive");
    prev = k;
  }
  if (trials_m < 1) throw std::domain_error("estimate: trials_m must be >= 1");
  if (p < 1) throw std::domain_error("estimate: p must be >= 1");

  const auto n_rows = ks.size();
  std::vector<TrialRecord> records(static_cast<std::size_t>(trials_m) * n_rows);

  const int n_workers = std::clamp(workers, 1, trials_m);
  if (n_workers == 1) {
    walk_trials(model, ks, p, seed, 0, trials_m, records);
  } else {
    // Disjoint trial ranges into disjoint record slots: no synchronization,
    // and the records are independent of how the ranges are cut.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    const int chunk = (trials_m + n_workers - 1) / n_workers;
    for (int w = 0; w < n_workers; ++w) {
      const int b = w * chunk;
      const int e = std::min(trials_m, b + chunk);
      if (b >= e) break;
      pool.emplace_back(walk_trials, std::cref(model), std::cref(ks), p, seed, b, e,
                        std::ref(records));
    }
    for (auto& th : pool) th.join();
  }

  // Reduce in trial order regardless of which thread produced each record.
  std::vector<KMetrics> rows(n_rows);
  std::vector<double> acc_col(static_cast<std::size_t>(trials_m));
  std::vector<double> cost_col(static_cast<std::size_t>(trials_m));
  std::vector<double> time_col(static_cast<std::size_t>(trials_m));
  for (std::size_t r = 0; r < n_rows; ++r) {
    WelfordAccumulator acc, cost, time;
    for (int t = 0; t < trials_m; ++t) {
      const TrialRecord& rec = records[static_cast<std::size_t>(t) * n_rows + r];
      acc.add(rec.acc);
      cost.add(rec.cost);
      time.add(rec.time);
      acc_col[static_cast<std::size_t>(t)] = rec.acc;
      cost_col[static_cast<std::size_t>(t)] = rec.cost;
      time_col[static_cast<std::size_t>(t)] = rec.time;
    }
    KMetrics& m = rows[r];
    m.k = ks[r];
    m.trials_m = trials_m;
    m.mean_acc = acc.mean;
    m.std_acc = acc.sample_std();
    m.mean_cost = cost.mean;
    m.std_cost = cost.sample_std();
    m.mean_time = time.mean;
    m.std_time = time.sample_std();
    m.ci_acc = percentile_ci(acc_col, ci_level);
    m.ci_cost = percentile_ci(cost_col, ci_level);
    m.ci_time = percentile_ci(time_col, ci_level);
  }
  return rows;
}

}  // namespace

KMetrics estimate_k(const ModelConfig& model, int k, int p, int trials_m,
                    std::uint64_t seed, double ci_level) {
  if (k < 1) throw std::domain_error("estimate_k: k must be >= 1");
  return estimate_rows(model, {k}, p, trials_m, seed, ci_level, 1)[0];
}

MetricsTable estimate_table(const ModelConfig& model, const SimulationSettings& settings,
                            const std::string& scenario_label, int workers) {
  validate(model);
  validate(settings);
  if (settings.k_grid.empty()) throw std::domain_error("estimate_table: empty k grid");
  const int p = settings.parallel_p.value_or(model.p_default);
  MetricsTable table;
  table.model = model.name;
  table.scenario = scenario_label;
  table.settings = settings;
  table.rows = estimate_rows(model, settings.k_grid, p, settings.trials_m,
                             settings.seed, settings.ci_level, workers);
  return table;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string metrics_csv(const MetricsTable& table) {
  std::string out =
      "k,mean_acc,std_acc,ci_acc_lo,ci_acc_hi,mean_cost,std_cost,ci_cost_lo,"
      "ci_cost_hi,mean_time,std_time,ci_time_lo,ci_time_hi,trials_m\n";
  for (const KMetrics& m : table.rows) {
    out += std::to_string(m.k);
    for (double v : {m.mean_acc, m.std_acc, m.ci_acc.lo, m.ci_acc.hi, m.mean_cost,
                     m.std_cost, m.ci_cost.lo, m.ci_cost.hi, m.mean_time, m.std_time,
                     m.ci_time.lo, m.ci_time.hi}) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    out += std::to_string(m.trials_m);
    out += '\n';
  }
  return out;
}

std::string metrics_json(const MetricsTable& table) {
  nlohmann::json j;
  j["model"] = table.model;
  j["scenario"] = table.scenario;
  j["settings"] = {{"k_grid", table.settings.k_grid},
                   {"trials_m", table.settings.trials_m},
                   {"seed", table.settings.seed},
                   {"ci_level", table.settings.ci_level}};
  if (table.settings.parallel_p) j["settings"]["parallel_p"] = *table.settings.parallel_p;
  j["rows"] = nlohmann::json::array();
  for (const KMetrics& m : table.rows) {
    j["rows"].push_back({{"k", m.k},
                         {"mean_acc", m.mean_acc},
                         {"std_acc", m.std_acc},
                         {"ci_acc", {m.ci_acc.lo, m.ci_acc.hi}},
                         {"mean_cost", m.mean_cost},
                         {"std_cost", m.std_cost},
                         {"ci_cost", {m.ci_cost.lo, m.ci_cost.hi}},
                         {"mean_time", m.mean_time},
                         {"std_time", m.std_time},
                         {"ci_time", {m.ci_time.lo, m.ci_time.hi}},
                         {"trials_m", m.trials_m}});
  }
  return j.dump(2) + "\n";
}

}  // namespace infscale
