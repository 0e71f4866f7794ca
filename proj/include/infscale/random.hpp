#pragma once

#include <cstdint>

namespace infscale {

// Deterministic, splittable random streams.
//
// Every random number in a simulation run is addressed by the tuple
// (master_seed, trial_index, inference_index, channel) and produced by a
// stateless hash of that tuple. There is no sequential generator state, so:
//   * results do not depend on thread scheduling or worker count,
//   * the draws for inference counts k and k+1 share their first k draws
//     (the k+1 case simply reads one more inference index),
//   * any subset of k values can be evaluated without re-deriving streams.
//
// Channels separate the three quantities sampled per inference so that adding
// a channel later cannot shift existing draws.

enum class Channel : std::uint64_t {
  len_in = 0,
  len_out = 1,
  acc = 2,
};

// SplitMix64 finalizer; good avalanche, not cryptographic.
std::uint64_t splitmix64(std::uint64_t x);

// Collapse a draw address into one well-mixed 64-bit word.
std::uint64_t mix_counters(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t inference, std::uint64_t channel);

// Map 64 random bits to a double in the open interval (0,1): the top 52 bits
// are centered on the grid (v + 0.5) / 2^52, so 0 and 1 are unreachable and
// the inverse normal CDF below stays finite.
double to_unit_interval(std::uint64_t bits);

// Inverse CDF of the standard normal (Wichura's AS241, double precision).
// Domain (0,1); relative error below 1e-15 over the usable range.
double inv_normal_cdf(double p);

// Standard normal draw for one fully specified address.
double normal_at(std::uint64_t seed, std::uint64_t trial,
                 std::uint64_t inference, Channel channel);

// Read cursor over one trial's per-inference draws. Copies are cheap; the
// stream is a view onto the address space, not a stateful generator.
class TrialStream {
 public:
  TrialStream(std::uint64_t master_seed, std::uint64_t trial_index)
      : seed_(master_seed), trial_(trial_index), inference_(0) {}

  // Draw for the current inference on the given channel.
  double normal(Channel channel) const {
    return normal_at(seed_, trial_, inference_, channel);
  }

  // Move to the next inference of this trial.
  void next_inference() { ++inference_; }

  std::uint64_t trial_index() const { return trial_; }
  std::uint64_t inference_index() const { return inference_; }

 private:
  std::uint64_t seed_;
  std::uint64_t trial_;
  std::uint64_t inference_;
};

}  // namespace infscale
