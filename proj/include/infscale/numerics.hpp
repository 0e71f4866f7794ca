#pragma once

#include <cmath>
#include <cstdint>

namespace infscale {

// Neumaier compensated summation. Keeps trial totals exact enough that
// zero-variance runs reproduce closed-form values bit for bit.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }

  double total() const { return sum + comp; }
};

// Welford running mean/variance. The running mean of a constant sequence is
// exactly that constant, which matters for the zero-variance contracts.
struct WelfordAccumulator {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }

  // Sample variance (n-1 denominator); 0 for fewer than two points.
  double sample_variance() const {
    return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  }
  double sample_std() const { return std::sqrt(sample_variance()); }
};

}  // namespace infscale
