#pragma once

#include <utility>

#include "infscale/config.hpp"
#include "infscale/random.hpp"

namespace infscale {

// One simulated inference pass.
struct InferenceDraw {
  double len_in = 0.0;    // tokens, >= 1
  double len_out = 0.0;   // tokens, >= 1
  double accuracy = 0.0;  // in [0,1]
  double cost = 0.0;      // USD
  double latency = 0.0;   // seconds
};

// Aggregate of k parallel inference passes under the best-of-k rule.
struct TrialOutcome {
  int k = 0;
  double accuracy_best = 0.0;  // max accuracy over the k draws
  double cost_total = 0.0;     // sum of per-pass costs
  double latency_total = 0.0;  // (k/p) * mean per-pass latency = sum/p
};

// Token lengths for the stream's current inference: Gaussian draws clipped to
// at least one token. Does not advance the stream.
std::pair<double, double> sample_lengths(const TrialStream& rng, const ModelConfig& model);

// Single-pass accuracy for the current inference, clipped into [0,1].
double sample_accuracy(const TrialStream& rng, const ModelConfig& model);

// Linear token-cost and token-latency models.
double inference_cost(double len_in, double len_out, const ModelConfig& model);
double inference_latency(double len_in, double len_out, const ModelConfig& model);

// All channels of the current inference; does not advance the stream.
InferenceDraw sample_inference(const TrialStream& rng, const ModelConfig& model);

// Simulate one trial of k inferences with parallel factor p. Draws come from
// the stream's inference sequence starting at its current cursor; the caller's
// stream is taken by value, so repeated calls with the same stream replay the
// same trial. k/p is treated as a real number (no rounding to whole waves).
// Throws std::domain_error for k < 1 or p < 1.
TrialOutcome run_trial(TrialStream rng, const ModelConfig& model, int k, int p);

}  // namespace infscale
