#include "infscale/stochastic.hpp"

#include <algorithm>
#include <stdexcept>

#include "infscale/numerics.hpp"

namespace infscale {

std::pair<double, double> sample_lengths(const TrialStream& rng, const ModelConfig& model) {
  const double zi = rng.normal(Channel::len_in);
  const double zo = rng.normal(Channel::len_out);
  const double li = std::max(1.0, model.mu_len_in + model.sigma_len_in * zi);
  const double lo = std::max(1.0, model.mu_len_out + model.sigma_len_out * zo);
  return {li, lo};
}

double sample_accuracy(const TrialStream& rng, const ModelConfig& model) {
  const double z = rng.normal(Channel::acc);
  return std::clamp(model.mu_acc + model.sigma_acc * z, 0.0, 1.0);
}

double inference_cost(double len_in, double len_out, const ModelConfig& model) {
  return model.c_in * len_in + model.c_out * len_out;
}

double inference_latency(double len_in, double len_out, const ModelConfig& model) {
  return model.t_in * len_in + model.t_out * len_out;
}

InferenceDraw sample_inference(const TrialStream& rng, const ModelConfig& model) {
  InferenceDraw d;
  const auto [li, lo] = sample_lengths(rng, model);
  d.len_in = li;
  d.len_out = lo;
  d.accuracy = sample_accuracy(rng, model);
  d.cost = inference_cost(li, lo, model);
  d.latency = inference_latency(li, lo, model);
  return d;
}

TrialOutcome run_trial(TrialStream rng, const ModelConfig& model, int k, int p) {
  if (k < 1) throw std::domain_error("run_trial: k must be >= 1");
  if (p < 1) throw std::domain_error("run_trial: p must be >= 1");
  TrialOutcome out;
  out.k = k;
  double best = 0.0;
  NeumaierSum cost, latency;
  for (int i = 0; i < k; ++i) {
    const InferenceDraw d = sample_inference(rng, model);
    best = std::max(best, d.accuracy);
    cost.add(d.cost);
    latency.add(d.latency);
    rng.next_inference();
  }
  out.accuracy_best = best;
  out.cost_total = cost.total();
  out.latency_total = latency.total() / static_cast<double>(p);
  return out;
}

}  // namespace infscale
