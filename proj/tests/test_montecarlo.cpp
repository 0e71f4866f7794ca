#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "infscale/montecarlo.hpp"

using namespace infscale;

TEST_CASE("percentile interval: point, interpolated, constant") {
  const CiPair single = percentile_ci({5.0}, 0.95);
  CHECK(single.lo == 5.0);
  CHECK(single.hi == 5.0);

  std::vector<double> v(100);
  for (int i = 0; i < 100; ++i) v[i] = i + 1.0;
  const CiPair c = percentile_ci(v, 0.90);
  CHECK(c.lo == doctest::Approx(5.95).epsilon(1e-12));
  CHECK(c.hi == doctest::Approx(95.05).epsilon(1e-12));

  const CiPair flat = percentile_ci({3.0, 3.0, 3.0, 3.0}, 0.5);
  CHECK(flat.lo == 3.0);
  CHECK(flat.hi == 3.0);

  CHECK_THROWS_AS(percentile_ci({}, 0.9), std::domain_error);
  CHECK_THROWS_AS(percentile_ci({1.0}, 1.0), std::domain_error);
}

TEST_CASE("single-trial estimate equals the trial outcome with zero spread") {
  const ModelConfig m = *model_preset("gpt-5");
  const KMetrics km = estimate_k(m, 16, 4, 1, 42);
  const TrialOutcome t = run_trial(TrialStream(42, 0), m, 16, 4);
  CHECK(km.mean_acc == t.accuracy_best);
  CHECK(km.mean_cost == t.cost_total);
  CHECK(km.mean_time == t.latency_total);
  CHECK(km.std_acc == 0.0);
  CHECK(km.ci_acc.lo == t.accuracy_best);
  CHECK(km.ci_acc.hi == t.accuracy_best);
}

TEST_CASE("zero-variance estimates collapse to exact closed forms") {
  ModelConfig m = *model_preset("gpt-5");
  m.sigma_len_in = m.sigma_len_out = m.sigma_acc = 0.0;
  const double unit_c = inference_cost(1024, 2048, m);
  const double unit_t = inference_latency(1024, 2048, m);
  const KMetrics km = estimate_k(m, 16, 4, 300, 42);
  CHECK(km.mean_acc == 0.94);
  CHECK(km.mean_cost == 16.0 * unit_c);
  CHECK(km.mean_time == (16.0 * unit_t) / 4.0);
  CHECK(km.std_acc == 0.0);
  CHECK(km.std_cost == 0.0);
  CHECK(km.std_time == 0.0);
  CHECK(km.ci_cost.lo == km.ci_cost.hi);
  CHECK(km.ci_cost.lo == km.mean_cost);
}

TEST_CASE("preset anchor values: gpt-5 at k=16") {
  const KMetrics km = estimate_k(*model_preset("gpt-5"), 16, 4, 300, 42);
  CHECK(km.mean_acc > 0.96);
  CHECK(km.mean_acc < 0.99);
  CHECK(km.std_acc < 0.03);
  CHECK(km.mean_cost == doctest::Approx(0.34816).epsilon(0.03));
  CHECK(km.mean_time == doctest::Approx(43.008).epsilon(0.03));
}

TEST_CASE("table rows cover the grid and equal standalone estimates bitwise") {
  const ModelConfig m = *model_preset("qwen3-next-80b-a3b");
  SimulationSettings st;
  st.k_grid = default_k_grid();
  st.trials_m = 50;
  st.seed = 42;
  const MetricsTable table = estimate_table(m, st, "essay-feedback");
  REQUIRE(table.rows.size() == 32);
  CHECK(table.scenario == "essay-feedback");
  for (size_t i = 0; i < table.rows.size(); ++i) {
    CHECK(table.rows[i].k == static_cast<int>(4 * (i + 1)));
  }
  for (size_t i : {size_t(0), size_t(3), size_t(15), size_t(31)}) {
    const KMetrics alone = estimate_k(m, table.rows[i].k, 4, 50, 42, 0.95);
    CHECK(table.rows[i].mean_acc == alone.mean_acc);
    CHECK(table.rows[i].mean_cost == alone.mean_cost);
    CHECK(table.rows[i].mean_time == alone.mean_time);
    CHECK(table.rows[i].std_acc == alone.std_acc);
    CHECK(table.rows[i].ci_time.lo == alone.ci_time.lo);
    CHECK(table.rows[i].ci_time.hi == alone.ci_time.hi);
  }
}

TEST_CASE("single-row grid with one trial equals estimate_k") {
  const ModelConfig m = *model_preset("gpt-5");
  SimulationSettings st;
  st.k_grid = {4};
  st.trials_m = 1;
  st.seed = 7;
  const MetricsTable t = estimate_table(m, st);
  REQUIRE(t.rows.size() == 1);
  const KMetrics alone = estimate_k(m, 4, 4, 1, 7);
  CHECK(t.rows[0].mean_acc == alone.mean_acc);
  CHECK(t.rows[0].mean_cost == alone.mean_cost);
}

TEST_CASE("same seed gives bit-identical tables; worker count is irrelevant") {
  const ModelConfig m = *model_preset("nemotron-ultra-253b");
  SimulationSettings st;
  st.k_grid = default_k_grid();
  st.trials_m = 100;
  st.seed = 42;
  const std::string once = metrics_csv(estimate_table(m, st, "x", 1));
  const std::string again = metrics_csv(estimate_table(m, st, "x", 1));
  const std::string w4 = metrics_csv(estimate_table(m, st, "x", 4));
  const std::string w8 = metrics_csv(estimate_table(m, st, "x", 8));
  CHECK(once == again);
  CHECK(once == w4);
  CHECK(once == w8);
}

TEST_CASE("mean accuracy is non-decreasing in k under shared extension") {
  SimulationSettings st;
  st.k_grid = default_k_grid();
  st.trials_m = 10000;
  st.seed = 42;
  const MetricsTable t = estimate_table(*model_preset("gpt-5"), st);
  for (size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].mean_acc >= t.rows[i - 1].mean_acc);
  }
}

TEST_CASE("per-pass cost and latency rates are k-independent") {
  // Exact with zero length variance.
  ModelConfig m0 = *model_preset("gpt-5-mini");
  m0.sigma_len_in = m0.sigma_len_out = 0.0;
  SimulationSettings st;
  st.k_grid = {4, 16, 64};
  st.trials_m = 40;
  st.seed = 1;
  const MetricsTable exact = estimate_table(m0, st);
  const double rate0 = exact.rows[0].mean_cost / 4.0;
  CHECK(exact.rows[1].mean_cost / 16.0 == doctest::Approx(rate0).epsilon(1e-12));
  CHECK(exact.rows[2].mean_cost / 64.0 == doctest::Approx(rate0).epsilon(1e-12));

  // Within sampling error otherwise.
  const ModelConfig m = *model_preset("gpt-5-mini");
  st.trials_m = 2000;
  const MetricsTable noisy = estimate_table(m, st);
  const double unit = inference_cost(m.mu_len_in, m.mu_len_out, m);
  const double unit_t = inference_latency(m.mu_len_in, m.mu_len_out, m) / 4.0;
  for (const auto& row : noisy.rows) {
    CHECK(row.mean_cost / row.k == doctest::Approx(unit).epsilon(0.005));
    CHECK(row.mean_time * 4.0 / row.k == doctest::Approx(4.0 * unit_t).epsilon(0.005));
  }
}

TEST_CASE("standard error of the mean scales like 1/sqrt(M)") {
  const ModelConfig m = *model_preset("gpt-5");
  const int reps = 200;
  auto spread_at = [&](int trials) {
    double s = 0.0, ss = 0.0;
    for (int r = 0; r < reps; ++r) {
      const KMetrics km = estimate_k(m, 8, 4, trials, 1000 + 7919ULL * r);
      s += km.mean_cost;
      ss += km.mean_cost * km.mean_cost;
    }
    const double mean = s / reps;
    return std::sqrt(ss / reps - mean * mean);
  };
  const double ratio = spread_at(100) / spread_at(400);
  CHECK(ratio > 1.6);  // ideal 2.0, +-20%
  CHECK(ratio < 2.4);
}

TEST_CASE("best-of-k mean accuracy agrees with a brute-force oracle") {
  // Independent generator family for the oracle draws.
  const ModelConfig m = *model_preset("qwen3-max");
  const int k = 4;
  const int oracle_n = 200000;
  std::mt19937_64 gen(99);
  std::normal_distribution<double> nd(0.0, 1.0);
  double osum = 0.0, osq = 0.0;
  for (int s = 0; s < oracle_n; ++s) {
    double best = 0.0;
    for (int i = 0; i < k; ++i) {
      const double a = std::clamp(m.mu_acc + m.sigma_acc * nd(gen), 0.0, 1.0);
      best = std::max(best, a);
    }
    osum += best;
    osq += best * best;
  }
  const double omean = osum / oracle_n;
  const double ovar = osq / oracle_n - omean * omean;

  const int mc_m = 20000;
  const KMetrics km = estimate_k(m, k, 4, mc_m, 42);
  const double se = std::sqrt(ovar / oracle_n + km.std_acc * km.std_acc / mc_m);
  CHECK(std::fabs(km.mean_acc - omean) < 4.0 * se);
}

TEST_CASE("csv export has the documented schema") {
  const ModelConfig m = *model_preset("gpt-5");
  SimulationSettings st;
  st.k_grid = {4, 8};
  st.trials_m = 5;
  const MetricsTable t = estimate_table(m, st, "essay-feedback");
  const std::string csv = metrics_csv(t);
  CHECK(csv.rfind("k,mean_acc,std_acc,ci_acc_lo,ci_acc_hi,mean_cost,std_cost,"
                  "ci_cost_lo,ci_cost_hi,mean_time,std_time,ci_time_lo,ci_time_hi,"
                  "trials_m\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("\n4,") != std::string::npos);
  CHECK(csv.find("\n8,") != std::string::npos);
}

TEST_CASE("invalid estimation inputs raise domain errors") {
  const ModelConfig m = *model_preset("gpt-5");
  CHECK_THROWS_AS(estimate_k(m, 0, 4, 10, 1), std::domain_error);
  CHECK_THROWS_AS(estimate_k(m, 4, 4, 0, 1), std::domain_error);
  SimulationSettings st;
  st.k_grid = {};
  CHECK_THROWS_AS(estimate_table(m, st), std::domain_error);
}
