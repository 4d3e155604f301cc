#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylvester/formulas.hpp"
#include "sylvester/geometry.hpp"
#include "sylvester/rng.hpp"
#include "sylvester/sampling.hpp"
#include "sylvester/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace sylvester;

namespace {

// Binomial coefficient at an odd upper index and half-integer lower index:
// C(n, n/2) = n! 16^m (m!)^2 / ((2m)!)^2 / pi with m = (n+1)/2, which
// follows from Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!). Returns the
// rational factor r with C(n, n/2) = r / pi.
BigRat half_binomial_over_pi(int n) {
  REQUIRE((n % 2) == 1);
  const unsigned m = static_cast<unsigned>((n + 1) / 2);
  BigInt p16 = 1;
  for (unsigned i = 0; i < m; ++i) p16 *= 16;
  const BigInt mf = factorial(m);
  const BigInt tmf = factorial(2 * m);
  return BigRat(factorial(static_cast<unsigned>(n)) * p16 * mf * mf, tmf * tmf);
}

BigRat int_binomial(int n, int k) {
  return BigRat(factorial(static_cast<unsigned>(n)),
                factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(n - k)));
}

BigRat pow_rat(const BigRat& b, int e) {
  BigRat r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

constexpr double kPi = 3.141592653589793238462643383279;

}  // namespace

TEST_CASE("convex position probability, frozen values and monotonicity") {
  CHECK(*convex_position_probability(1).exact == BigRat(0));
  CHECK(*convex_position_probability(2).exact == BigRat(2, 3));
  CHECK(*convex_position_probability(3).exact == BigRat(11, 12));
  CHECK(*convex_position_probability(4).exact == BigRat(59, 60));
  BigRat prev = 0;
  for (int d = 2; d <= 60; ++d) {
    const BigRat cur = *convex_position_probability(d).exact;
    CHECK(cur > prev);
    CHECK(cur < 1);
    prev = cur;
  }
  CHECK_THROWS_AS(convex_position_probability(0), std::invalid_argument);
}

TEST_CASE("expected walk hull vertices, frozen values") {
  CHECK(*expected_vertices_walk(3, 2).exact == BigRat(11, 3));
  CHECK(*expected_vertices_walk(10, 2).exact == BigRat(7381, 1260));
  CHECK(*expected_vertices_walk(4, 3).exact == BigRat(59, 12));
  CHECK_THROWS_AS(expected_vertices_walk(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(expected_vertices_walk(3, 0), std::invalid_argument);
}

TEST_CASE("short walks keep every point on the hull") {
  for (int d = 1; d <= 15; ++d)
    for (int n = 1; n <= d; ++n)
      CHECK(*expected_vertices_walk(n, d).exact == BigRat(n + 1));
}

TEST_CASE("expected vertices drop below n+1 once n exceeds d") {
  for (int d = 1; d <= 10; ++d)
    CHECK(*expected_vertices_walk(d + 1, d).exact ==
          BigRat(d + 2) - BigRat(2, factorial(static_cast<unsigned>(d) + 1)));
}

TEST_CASE("bridge vertex probability against a hand enumeration on the line") {
  // Zero-sum increments (3, -1, -2). For each of the six orders the bridge
  // visits 0, s1, s1+s2; the origin is a hull vertex iff it is the strict
  // min or max. Direct inspection: 4 of 6 orders.
  const int inc[3] = {3, -1, -2};
  int idx[3] = {0, 1, 2};
  std::sort(idx, idx + 3);
  int vertex_orders = 0, orders = 0;
  do {
    const int b1 = inc[idx[0]];
    const int b2 = b1 + inc[idx[1]];
    ++orders;
    const int lo = std::min({0, b1, b2});
    const int hi = std::max({0, b1, b2});
    if (lo == 0 || hi == 0) ++vertex_orders;
  } while (std::next_permutation(idx, idx + 3));
  CHECK(orders == 6);
  CHECK(vertex_orders == 4);
  CHECK(*bridge_vertex_probability(1).exact == BigRat(vertex_orders, orders));
  CHECK(*bridge_vertex_probability(1).exact == BigRat(2, 3));
}

TEST_CASE("bridge vertex probability, frozen values") {
  CHECK(*bridge_vertex_probability(2).exact == BigRat(11, 12));
  CHECK(*bridge_vertex_probability(3).exact == BigRat(59, 60));
  CHECK_THROWS_AS(bridge_vertex_probability(0), std::invalid_argument);
}

TEST_CASE("planar bridge hull counts summed over all increment orders") {
  // For any zero-sum set of 4 generic planar increments, averaging over the
  // 24 orders makes each of the 4 bridge points a hull vertex with
  // probability exactly 11/12, so the total count over all orders is
  // 24 * 4 * 11/12 = 88. Exchangeability gives this for every generic set,
  // not just on average.
  RngStream rng(271828, 0);
  int accepted = 0;
  while (accepted < 3) {
    const auto inc = random_zero_sum_integer_set(2, 60, rng);
    std::vector<int> order = {0, 1, 2, 3};
    bool generic = true;
    long long total = 0;
    do {
      std::vector<Point> pts(4, Point(2, 0.0));
      for (int k = 1; k < 4; ++k)
        for (int i = 0; i < 2; ++i)
          pts[static_cast<size_t>(k)][static_cast<size_t>(i)] =
              pts[static_cast<size_t>(k) - 1][static_cast<size_t>(i)] +
              static_cast<double>(inc[static_cast<size_t>(order[static_cast<size_t>(k) - 1])]
                                     [static_cast<size_t>(i)]);
      RatPoint rp(2);
      std::vector<RatPoint> rpts;
      for (const auto& p : pts) {
        rp[0] = BigRat(static_cast<long long>(p[0]));
        rp[1] = BigRat(static_cast<long long>(p[1]));
        rpts.push_back(rp);
      }
      if (!general_position_check_exact(rpts)) {
        generic = false;
        break;
      }
      total += static_cast<long long>(count_hull_vertices(pts));
    } while (std::next_permutation(order.begin(), order.end()));
    if (!generic) continue;
    ++accepted;
    CHECK(total == 88);
  }
}

TEST_CASE("ball probability against the exact rational form") {
  // For even d the probability is 1 - Q / pi^d with rational Q assembled
  // from half-integer binomials; for odd d it is rational outright. Both
  // reduce to Gamma evaluations the implementation does in log space.
  for (int d = 1; d <= 8; ++d) {
    const int n1 = d + 1;
    const long long n2 = static_cast<long long>(n1) * n1;
    BigRat q;
    double oracle;
    if (d % 2 == 0) {
      const BigRat r1 = half_binomial_over_pi(n1);
      const BigRat r2 = half_binomial_over_pi(static_cast<int>(n2));
      BigInt p2 = 1;
      for (int i = 0; i < d; ++i) p2 *= 2;
      q = BigRat(d + 2) * pow_rat(r1, n1) / (BigRat(p2) * r2);
      oracle = 1.0 - to_double(q) / std::pow(kPi, d);
    } else {
      const BigRat b1 = int_binomial(n1, n1 / 2);
      const BigRat b2 = int_binomial(static_cast<int>(n2), static_cast<int>(n2 / 2));
      BigInt p2 = 1;
      for (int i = 0; i < d; ++i) p2 *= 2;
      q = BigRat(d + 2) * pow_rat(b1, n1) / (BigRat(p2) * b2);
      oracle = 1.0 - to_double(q);
    }
    const double impl = kingman_ball_probability(d).approx;
    CHECK(std::fabs(impl - oracle) <= 1e-9 * std::max(1.0, std::fabs(oracle)));
  }
  // d = 1: three points on a line are never in convex position.
  CHECK(std::fabs(kingman_ball_probability(1).approx) <= 1e-14);
  // d = 2 is the classical disk constant.
  const double disk = 1.0 - 35.0 / (12.0 * kPi * kPi);
  CHECK(std::fabs(kingman_ball_probability(2).approx - disk) <= 1e-12);
  CHECK(kingman_ball_probability(2).approx == doctest::Approx(0.70447988104288368).epsilon(1e-12));

  double prev = -1.0;
  for (int d = 1; d <= 10; ++d) {
    const double cur = kingman_ball_probability(d).approx;
    CHECK(cur > prev);
    CHECK(cur < 1.0);
    prev = cur;
  }
  CHECK(!kingman_ball_probability(3).exact.has_value());
  CHECK_THROWS_AS(kingman_ball_probability(0), std::invalid_argument);
}

TEST_CASE("exact identities between the walk and bridge formulas") {
  for (int d = 1; d <= 20; ++d)
    CHECK(BigRat(d + 2) * (*bridge_vertex_probability(d).exact) ==
          *expected_vertices_walk(d + 1, d).exact);
  for (int d = 1; d <= 30; ++d)
    CHECK(*expected_vertices_walk(d + 1, d).exact + (1 - *convex_position_probability(d).exact) ==
          BigRat(d + 2));
}

TEST_CASE("classical constants") {
  const auto& table = classical_constants();
  REQUIRE(table.count("triangle") == 1);
  REQUIRE(table.count("disk") == 1);
  REQUIRE(table.count("gaussian_d2") == 1);
  REQUIRE(table.count("gaussian_d3") == 1);

  CHECK(*table.at("triangle").exact == BigRat(2, 3));
  CHECK(table.at("triangle").approx == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(table.at("disk").approx == doctest::Approx(0.70447988104288368).epsilon(1e-12));
  CHECK(table.at("gaussian_d2").approx == doctest::Approx(0.64901).epsilon(5e-5));
  CHECK(table.at("gaussian_d3").approx == doctest::Approx(0.90221).epsilon(5e-5));
  for (const auto& [name, v] : table) {
    CHECK(!name.empty());
    CHECK(!v.description.empty());
    CHECK(v.approx > 0.0);
    CHECK(v.approx < 1.0);
  }
}

TEST_CASE("gaussian nonconvexity asymptotic") {
  // Long-double recomputation of 2 sqrt(e^d / (2 (d+2)^{d-2} (2 pi)^{d+1}))
  // to rule out transcription or cancellation trouble in the double path.
  const long double pi_l = 3.14159265358979323846264338327950288L;
  for (int d = 1; d <= 200; ++d) {
    const long double dd = static_cast<long double>(d);
    const long double lv =
        std::log(2.0L) + 0.5L * (dd - std::log(2.0L) - (dd - 2.0L) * std::log(dd + 2.0L) -
                                 (dd + 1.0L) * std::log(2.0L * pi_l));
    const long double ref = std::exp(lv);
    const double got = gaussian_nonconvex_asymptotic(d);
    CHECK(std::fabs(static_cast<double>((got - ref) / ref)) <= 1e-9);
  }

  // Strictly decreasing and positive through d = 120.
  double prev = std::numeric_limits<double>::infinity();
  for (int d = 1; d <= 120; ++d) {
    const double v = gaussian_nonconvex_asymptotic(d);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }

  // Against the exact iid Gaussian values at d = 2 and d = 3: the leading
  // order sits below the truth and climbs toward it as d grows.
  const double true2 = 1.0 - classical_constants().at("gaussian_d2").approx;
  const double true3 = 1.0 - classical_constants().at("gaussian_d3").approx;
  const double r2 = gaussian_nonconvex_asymptotic(2) / true2;
  const double r3 = gaussian_nonconvex_asymptotic(3) / true3;
  CHECK(r2 > 0.5);
  CHECK(r2 < 1.0);
  CHECK(r3 > 0.5);
  CHECK(r3 < 1.0);
  CHECK(r3 > r2);

  // Log-space evaluation underflows to zero instead of blowing up.
  CHECK(gaussian_nonconvex_asymptotic(100) > 0.0);
  CHECK(gaussian_nonconvex_asymptotic(400) == 0.0);
  CHECK_THROWS_AS(gaussian_nonconvex_asymptotic(0), std::invalid_argument);
}

TEST_CASE("approx fields agree with their exact values") {
  for (int d = 1; d <= 40; ++d) {
    const auto c = convex_position_probability(d);
    CHECK(c.approx == to_double(*c.exact));
    const auto b = bridge_vertex_probability(d);
    CHECK(b.approx == to_double(*b.exact));
    const auto e = expected_vertices_walk(2 * d + 1, d);
    CHECK(e.approx == to_double(*e.exact));
    CHECK(!c.description.empty());
    CHECK(!b.description.empty());
    CHECK(!e.description.empty());
  }
}
