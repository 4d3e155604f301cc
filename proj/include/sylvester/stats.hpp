#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace sylvester {

// Two-sided 99% normal quantile, Phi^{-1}(0.995).
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
  double low;
  double high;
};

// Wilson score interval for a binomial proportion. Well-behaved near 0 and
// 1, which matters for the small non-convexity rates at d = 4 and up.
// trials == 0 gives the vacuous [0, 1]. Endpoints are clamped to [0, 1]:
// they lie there mathematically, but the arithmetic can overshoot by an
// ulp at p = 0 or 1.
inline Interval wilson_interval(uint64_t successes, uint64_t trials, double z = kZ99) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

// Normal-theory interval around a sample mean given its standard error.
inline Interval mean_interval(double mean, double std_error, double z = kZ99) {
  return {mean - z * std_error, mean + z * std_error};
}

}  // namespace sylvester
