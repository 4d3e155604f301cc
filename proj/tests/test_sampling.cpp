#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylvester/geometry.hpp"
#include "sylvester/rng.hpp"
#include "sylvester/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

using namespace sylvester;

namespace {

double norm2(const Point& p) {
  double s = 0.0;
  for (double x : p) s += x * x;
  return std::sqrt(s);
}

// Two-sample Kolmogorov-Smirnov statistic by merge scan over sorted copies.
double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  double dmax = 0.0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    dmax = std::max(dmax, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return dmax;
}

}  // namespace

TEST_CASE("counter block matches the published known-answer vectors") {
  // Zero counter, zero key.
  CHECK(philox::rounds10({0, 0, 0, 0}, {0, 0}) ==
        std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  // All-ones counter and key.
  CHECK(philox::rounds10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                         {0xffffffffu, 0xffffffffu}) ==
        std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  // Digits of pi as counter and key.
  CHECK(philox::rounds10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                         {0xa4093822u, 0x299f31d0u}) ==
        std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("stream words are the block words in lane order") {
  const uint64_t seed = 0x0123456789abcdefull, stream = 42;
  RngStream rng(seed, stream);
  const auto b0 = philox::block(seed, stream, 0);
  const auto b1 = philox::block(seed, stream, 1);
  CHECK(rng.next_u64() == (static_cast<uint64_t>(b0[0]) | (static_cast<uint64_t>(b0[1]) << 32)));
  CHECK(rng.next_u64() == (static_cast<uint64_t>(b0[2]) | (static_cast<uint64_t>(b0[3]) << 32)));
  CHECK(rng.next_u64() == (static_cast<uint64_t>(b1[0]) | (static_cast<uint64_t>(b1[1]) << 32)));
  CHECK(rng.word_index() == 3);
}

TEST_CASE("streams replay exactly and do not collide") {
  RngStream a(99, 7);
  std::vector<uint64_t> first;
  for (int i = 0; i < 64; ++i) first.push_back(a.next_u64());

  RngStream b(99, 7);
  for (int i = 0; i < 64; ++i) CHECK(b.next_u64() == first[static_cast<size_t>(i)]);

  RngStream c(99, 8);
  RngStream e(100, 7);
  int same_c = 0, same_e = 0;
  for (int i = 0; i < 64; ++i) {
    if (c.next_u64() == first[static_cast<size_t>(i)]) ++same_c;
    if (e.next_u64() == first[static_cast<size_t>(i)]) ++same_e;
  }
  CHECK(same_c == 0);
  CHECK(same_e == 0);
}

TEST_CASE("normal draws consume the stream at a fixed rate") {
  RngStream rng(5, 0);
  rng.next_normal();
  CHECK(rng.word_index() == 2);  // one Box-Muller pair, spare buffered
  rng.next_normal();
  CHECK(rng.word_index() == 2);  // spare consumed, no new words
  rng.next_normal();
  CHECK(rng.word_index() == 4);
}

TEST_CASE("unit draws stay in their half-open ranges") {
  RngStream rng(17, 3);
  for (int i = 0; i < 200000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = rng.next_unit_open();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("uniform mean is centered") {
  RngStream rng(18, 0);
  double s = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) s += rng.next_unit();
  // 4 sigma with sd = 1/sqrt(12n).
  CHECK(std::fabs(s / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
}

TEST_CASE("bounded integer draws cover the range and respect endpoints") {
  RngStream rng(23, 0);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 2000; ++i) {
    const int64_t v = rng.next_int(-2, 2);
    REQUIRE(v >= -2);
    REQUIRE(v <= 2);
    ++hits[static_cast<size_t>(v + 2)];
  }
  for (int h : hits) CHECK(h > 300);
  for (int i = 0; i < 50; ++i) CHECK(rng.next_int(7, 7) == 7);
  for (int i = 0; i < 1000; ++i) {
    const int64_t v = rng.next_int(-1000000, 1000000);
    CHECK(v >= -1000000);
    CHECK(v <= 1000000);
  }
}

TEST_CASE("gaussian moments at one million draws") {
  RngStream rng(29, 0);
  const int n = 1000000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.next_normal();
    s += z;
    s2 += z * z;
  }
  const double mean = s / n;
  const double var = s2 / n - mean * mean;
  CHECK(std::fabs(mean) < 4e-3);               // 4 sigma, sd = 1e-3
  CHECK(std::fabs(var - 1.0) < 6e-3);          // 4 sigma, sd ~ sqrt(2/n)
}

TEST_CASE("box-muller pair components are uncorrelated") {
  RngStream rng(31, 0);
  const int n = 500000;
  double sxy = 0.0, sx = 0.0, sy = 0.0;
  for (int i = 0; i < n; ++i) {
    double z0, z1;
    rng.next_normal_pair(z0, z1);
    sx += z0;
    sy += z1;
    sxy += z0 * z1;
  }
  const double corr = (sxy / n - (sx / n) * (sy / n));
  CHECK(std::fabs(corr) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sphere increments have exact norm") {
  for (int d : {1, 2, 3, 6}) {
    RngStream rng(37, static_cast<uint64_t>(d));
    const auto spec = IncrementSpec::sphere(d, 2.5);
    for (int i = 0; i < 2000; ++i) {
      const Point x = sample_increment(spec, rng);
      REQUIRE(static_cast<int>(x.size()) == d);
      CHECK(norm2(x) == doctest::Approx(2.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("cube increments stay inside the box and fill it") {
  RngStream rng(41, 0);
  const auto spec = IncrementSpec::cube(3, 0.75);
  double maxabs = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const Point x = sample_increment(spec, rng);
    for (double c : x) {
      CHECK(std::fabs(c) <= 0.75);
      maxabs = std::max(maxabs, std::fabs(c));
    }
  }
  CHECK(maxabs > 0.74);  // draws reach the faces
}

TEST_CASE("cauchy norm exceeds its scale exactly half the time") {
  RngStream rng(43, 0);
  const auto spec = IncrementSpec::cauchy(3, 1.5);
  const int n = 100000;
  int above = 0;
  for (int i = 0; i < n; ++i) {
    const Point x = sample_increment(spec, rng);
    const double r = norm2(x);
    REQUIRE(std::isfinite(r));
    if (r > 1.5) ++above;
  }
  // The radius is scale * |tan(pi (U - 1/2))|, so P(norm > scale) = 1/2.
  CHECK(std::fabs(above / static_cast<double>(n) - 0.5) < 4.0 * std::sqrt(0.25 / n));
}

TEST_CASE("walk paths are prefix sums from the origin") {
  RngStream rng(47, 0);
  const auto spec = IncrementSpec::gaussian(3);
  const auto path = walk_path(3, 8, spec, rng);
  CHECK(path.d == 3);
  CHECK(path.kind == PathKind::Walk);
  REQUIRE(path.points.size() == 9);
  for (double c : path.points[0]) CHECK(c == 0.0);

  // Replaying the stream reproduces the increments step by step.
  RngStream replay(47, 0);
  Point expect(3, 0.0), inc(3);
  for (size_t k = 1; k < path.points.size(); ++k) {
    sample_increment_into(spec, replay, inc);
    for (int i = 0; i < 3; ++i) expect[static_cast<size_t>(i)] += inc[static_cast<size_t>(i)];
    for (int i = 0; i < 3; ++i)
      CHECK(path.points[k][static_cast<size_t>(i)] ==
            doctest::Approx(expect[static_cast<size_t>(i)]).epsilon(1e-15));
  }

  CHECK(walk_path(2, 1, IncrementSpec::gaussian(2), rng).points.size() == 2);
  CHECK_THROWS_AS(walk_path(3, 0, spec, rng), std::invalid_argument);
  CHECK_THROWS_AS(walk_path(2, 5, spec, rng), std::invalid_argument);
  CHECK_THROWS_AS(walk_path(0, 5, IncrementSpec::gaussian(0), rng), std::invalid_argument);
}

TEST_CASE("bridges start and end at the origin across laws and dimensions") {
  const IncrementLaw laws[] = {IncrementLaw::StdGaussian, IncrementLaw::UniformCube,
                               IncrementLaw::UniformSphere, IncrementLaw::IsotropicCauchy};
  for (IncrementLaw law : laws) {
    for (int d = 1; d <= 10; ++d) {
      IncrementSpec spec;
      spec.law = law;
      spec.d = d;
      spec.param = 1.0;
      RngStream rng(53, static_cast<uint64_t>(d));
      const int reps = 10000;
      for (int rep = 0; rep < reps; ++rep) {
        const auto path = bridge_path_centered(d, spec, rng);
        REQUIRE(path.points.size() == static_cast<size_t>(d) + 3);
        for (double c : path.points.front()) REQUIRE(c == 0.0);
        double scale = 1.0, close = 0.0;
        for (size_t k = 1; k < path.points.size(); ++k)
          for (int i = 0; i < d; ++i)
            scale = std::max(scale, std::fabs(path.points[k][static_cast<size_t>(i)] -
                                              path.points[k - 1][static_cast<size_t>(i)]));
        for (double c : path.points.back()) close = std::max(close, std::fabs(c));
        REQUIRE(close <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("bridge closure at scale, heaviest and lightest tails") {
  for (int d : {2, 10}) {
    for (IncrementLaw law : {IncrementLaw::StdGaussian, IncrementLaw::IsotropicCauchy}) {
      IncrementSpec spec;
      spec.law = law;
      spec.d = d;
      spec.param = 1.0;
      RngStream rng(59, static_cast<uint64_t>(d));
      for (int rep = 0; rep < 100000; ++rep) {
        const auto path = bridge_path_centered(d, spec, rng);
        double scale = 1.0, close = 0.0;
        for (size_t k = 1; k < path.points.size(); ++k)
          for (int i = 0; i < d; ++i)
            scale = std::max(scale, std::fabs(path.points[k][static_cast<size_t>(i)] -
                                              path.points[k - 1][static_cast<size_t>(i)]));
        for (double c : path.points.back()) close = std::max(close, std::fabs(c));
        REQUIRE(close <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("centered bridge increments are exchangeable in distribution") {
  // Norm of the first centered increment vs norm of the third, taken from
  // disjoint halves of the sample so the two-sample KS test applies.
  const int half = 50000;
  std::vector<double> first_norms, third_norms;
  first_norms.reserve(half);
  third_norms.reserve(half);
  const auto spec = IncrementSpec::gaussian(3);
  RngStream rng(61, 0);
  for (int rep = 0; rep < 2 * half; ++rep) {
    const auto path = bridge_path_centered(3, spec, rng);
    Point xi(3);
    const size_t k = rep < half ? 1 : 3;
    for (int i = 0; i < 3; ++i)
      xi[static_cast<size_t>(i)] =
          path.points[k][static_cast<size_t>(i)] - path.points[k - 1][static_cast<size_t>(i)];
    (rep < half ? first_norms : third_norms).push_back(norm2(xi));
  }
  const double dstat = ks_two_sample(first_norms, third_norms);
  // 1% critical value 1.628 * sqrt((n+m)/(nm)) for n = m = 50000.
  CHECK(dstat < 1.628 * std::sqrt(2.0 / half));
}

TEST_CASE("planar gaussian walks land in general position") {
  const auto spec = IncrementSpec::gaussian(2);
  RngStream rng(67, 0);
  int failures = 0;
  for (int rep = 0; rep < 100000; ++rep) {
    const auto path = walk_path(2, 3, spec, rng);
    if (!general_position_check(path.points, 1e-9)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("one-dimensional sphere law degenerates by design") {
  // In d = 1 the sphere law is +/- radius, so three walk points collide
  // with probability about 1/2. This is why full-dimensionality of the
  // increment law is a stated hypothesis and not a formality.
  const auto spec = IncrementSpec::sphere(1, 1.0);
  RngStream rng(71, 0);
  int degenerate = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const auto path = walk_path(1, 2, spec, rng);
    if (is_convex_position(path.points).kind == PositionKind::Degenerate) ++degenerate;
  }
  CHECK(degenerate > 300);
  CHECK(degenerate < 700);
}

TEST_CASE("zero-sum integer sets") {
  RngStream rng(73, 5);
  for (int d : {1, 2, 3, 4}) {
    for (int rep = 0; rep < 200; ++rep) {
      const auto v = random_zero_sum_integer_set(d, 1000, rng);
      REQUIRE(v.size() == static_cast<size_t>(d) + 2);
      for (int i = 0; i < d; ++i) {
        long long s = 0;
        for (const auto& p : v) s += p[static_cast<size_t>(i)];
        CHECK(s == 0);
      }
      for (size_t k = 0; k + 1 < v.size(); ++k)
        for (long long c : v[k]) {
          CHECK(c >= -1000);
          CHECK(c <= 1000);
        }
      for (long long c : v.back()) {
        CHECK(c >= -1000 * (d + 1));
        CHECK(c <= 1000 * (d + 1));
      }
    }
  }

  RngStream r1(11, 2), r2(11, 2), r3(11, 3);
  const auto a = random_zero_sum_integer_set(3, 50, r1);
  CHECK(a == random_zero_sum_integer_set(3, 50, r2));
  CHECK(a != random_zero_sum_integer_set(3, 50, r3));

  CHECK_THROWS_AS(random_zero_sum_integer_set(0, 10, r1), std::invalid_argument);
  CHECK_THROWS_AS(random_zero_sum_integer_set(2, 0, r1), std::invalid_argument);
}

TEST_CASE("law names round-trip and bad names throw") {
  CHECK(parse_law("gaussian") == IncrementLaw::StdGaussian);
  CHECK(parse_law("cube") == IncrementLaw::UniformCube);
  CHECK(parse_law("sphere") == IncrementLaw::UniformSphere);
  CHECK(parse_law("cauchy") == IncrementLaw::IsotropicCauchy);
  for (IncrementLaw law : {IncrementLaw::StdGaussian, IncrementLaw::UniformCube,
                           IncrementLaw::UniformSphere, IncrementLaw::IsotropicCauchy})
    CHECK(parse_law(law_name(law)) == law);
  CHECK_THROWS_AS(parse_law("levy"), std::invalid_argument);
  CHECK_THROWS_AS(parse_law(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_law("Gaussian"), std::invalid_argument);
}

TEST_CASE("increment spec validation") {
  CHECK_THROWS_AS(IncrementSpec::gaussian(0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IncrementSpec::cube(2, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IncrementSpec::sphere(2, -1.0).validate(), std::invalid_argument);
  CHECK_NOTHROW(IncrementSpec::cauchy(1, 0.5).validate());
}
