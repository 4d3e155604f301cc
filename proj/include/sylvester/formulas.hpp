#pragma once

#include "sylvester/bigint.hpp"

#include <map>
#include <optional>
#include <string>

namespace sylvester {

// A closed-form quantity carried in both exact and floating form. `exact`
// is present whenever the value is rational; `approx` always equals the
// nearest double of the mathematical value.
struct TheoryValue {
  std::optional<BigRat> exact;
  double approx = 0.0;
  std::string description;
};

// Probability that the d+2 points S_0, ..., S_{d+1} of a generic random
// walk in dimension d (equivalently the d+2 points of an exchangeable
// bridge) are in convex position: 1 - 2/(d+1)!.
// Throws std::invalid_argument if d < 1.
TheoryValue convex_position_probability(int d);

// Expected number of hull vertices of the first n+1 points of a generic
// walk in dimension d: (2/n!) * (entry(n+1, d) + entry(n+1, d-2) + ...).
// Throws std::invalid_argument if n < 1 or d < 1.
TheoryValue expected_vertices_walk(int n, int d);

// Probability that a fixed point of a generic (d+2)-step exchangeable
// bridge is a hull vertex: (2/(d+2)!) * (entry(d+2, d) + entry(d+2, d-2)
// + ...). Equals expected_vertices_walk(d+1, d) / (d+2).
// Throws std::invalid_argument if d < 1.
TheoryValue bridge_vertex_probability(int d);

// Classical comparison point: probability that d+2 iid uniform points in a
// d-ball are in convex position. Rational in pi; evaluated in floating
// point through log-gamma. exact is never set.
// Throws std::invalid_argument if d < 1.
TheoryValue kingman_ball_probability(int d);

// Named classical constants for iid Sylvester baselines, keyed by the CLI
// target names: "triangle" (2/3), "disk" (1 - 35/(12 pi^2)),
// "gaussian_d2" ((6/pi) asin(1/3)), "gaussian_d3" (1/2 + (5/pi) asin(1/4)).
const std::map<std::string, TheoryValue>& classical_constants();

// Leading-order non-convexity probability for d+2 iid standard Gaussian
// points as d grows: 2 sqrt(e^d / (2 (d+2)^{d-2} (2 pi)^{d+1})), evaluated
// in log space so it underflows gracefully instead of overflowing.
// Throws std::invalid_argument if d < 1.
double gaussian_nonconvex_asymptotic(int d);

}  // namespace sylvester
