#include "sylvester/formulas.hpp"

#include "sylvester/stirling.hpp"

#include <cmath>
#include <stdexcept>

namespace sylvester {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

TheoryValue from_rational(BigRat q, std::string description) {
  TheoryValue v;
  v.approx = to_double(q);
  v.exact = std::move(q);
  v.description = std::move(description);
  return v;
}
}  // namespace

TheoryValue convex_position_probability(int d) {
  if (d < 1) throw std::invalid_argument("convex_position_probability: d must be >= 1");
  BigRat q(BigInt(2), factorial(static_cast<unsigned>(d) + 1));
  return from_rational(1 - q, "P(d+2 walk or bridge points in convex position)");
}

TheoryValue expected_vertices_walk(int n, int d) {
  if (n < 1) throw std::invalid_argument("expected_vertices_walk: n must be >= 1");
  if (d < 1) throw std::invalid_argument("expected_vertices_walk: d must be >= 1");
  BigRat q(2 * alternating_tail_sum(n + 1, d), factorial(static_cast<unsigned>(n)));
  return from_rational(std::move(q), "E[hull vertices of S_0..S_n]");
}

TheoryValue bridge_vertex_probability(int d) {
  if (d < 1) throw std::invalid_argument("bridge_vertex_probability: d must be >= 1");
  BigRat q(2 * alternating_tail_sum(d + 2, d), factorial(static_cast<unsigned>(d) + 2));
  return from_rational(std::move(q), "P(fixed bridge point is a hull vertex)");
}

TheoryValue kingman_ball_probability(int d) {
  if (d < 1) throw std::invalid_argument("kingman_ball_probability: d must be >= 1");
  // 1 - (d+2) 2^{-d} binom(d+1, (d+1)/2)^{d+1} / binom((d+1)^2, (d+1)^2/2),
  // with the half-integer binomials read through log-gamma.
  auto lbinom = [](double a, double b) {
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
  };
  const double dd = static_cast<double>(d);
  const double top = dd + 1.0;
  const double big = top * top;
  const double log_q = std::log(dd + 2.0) - dd * std::log(2.0) +
                       top * lbinom(top, top / 2.0) - lbinom(big, big / 2.0);
  TheoryValue v;
  v.approx = 1.0 - std::exp(log_q);
  v.description = "P(d+2 iid uniform ball points in convex position)";
  return v;
}

const std::map<std::string, TheoryValue>& classical_constants() {
  static const std::map<std::string, TheoryValue> table = [] {
    std::map<std::string, TheoryValue> m;
    TheoryValue triangle;
    triangle.exact = BigRat(2, 3);
    triangle.approx = 2.0 / 3.0;
    triangle.description = "P(4 iid uniform triangle points in convex position)";
    m.emplace("triangle", std::move(triangle));

    TheoryValue disk;
    disk.approx = 1.0 - 35.0 / (12.0 * kPi * kPi);
    disk.description = "P(4 iid uniform disk points in convex position)";
    m.emplace("disk", std::move(disk));

    TheoryValue g2;
    g2.approx = (6.0 / kPi) * std::asin(1.0 / 3.0);
    g2.description = "P(4 iid planar Gaussian points in convex position)";
    m.emplace("gaussian_d2", std::move(g2));

    TheoryValue g3;
    g3.approx = 0.5 + (5.0 / kPi) * std::asin(0.25);
    g3.description = "P(5 iid Gaussian points in R^3 in convex position)";
    m.emplace("gaussian_d3", std::move(g3));
    return m;
  }();
  return table;
}

double gaussian_nonconvex_asymptotic(int d) {
  if (d < 1) throw std::invalid_argument("gaussian_nonconvex_asymptotic: d must be >= 1");
  const double dd = static_cast<double>(d);
  const double log_v = std::log(2.0) + 0.5 * (dd - std::log(2.0) - (dd - 2.0) * std::log(dd + 2.0) -
                                              (dd + 1.0) * std::log(2.0 * kPi));
  return std::exp(log_v);
}

}  // namespace sylvester
