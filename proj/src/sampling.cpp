#include "sylvester/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace sylvester {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
}

IncrementSpec IncrementSpec::gaussian(int d) { return IncrementSpec{IncrementLaw::StdGaussian, d, 1.0}; }
IncrementSpec IncrementSpec::cube(int d, double half_width) {
  return IncrementSpec{IncrementLaw::UniformCube, d, half_width};
}
IncrementSpec IncrementSpec::sphere(int d, double radius) {
  return IncrementSpec{IncrementLaw::UniformSphere, d, radius};
}
IncrementSpec IncrementSpec::cauchy(int d, double scale) {
  return IncrementSpec{IncrementLaw::IsotropicCauchy, d, scale};
}

void IncrementSpec::validate() const {
  if (d < 1) throw std::invalid_argument("IncrementSpec: d must be >= 1");
  if (!(param > 0.0)) throw std::invalid_argument("IncrementSpec: param must be positive");
}

const char* law_name(IncrementLaw law) {
  switch (law) {
    case IncrementLaw::StdGaussian: return "gaussian";
    case IncrementLaw::UniformCube: return "cube";
    case IncrementLaw::UniformSphere: return "sphere";
    case IncrementLaw::IsotropicCauchy: return "cauchy";
  }
  return "?";
}

IncrementLaw parse_law(const std::string& name) {
  if (name == "gaussian") return IncrementLaw::StdGaussian;
  if (name == "cube") return IncrementLaw::UniformCube;
  if (name == "sphere") return IncrementLaw::UniformSphere;
  if (name == "cauchy") return IncrementLaw::IsotropicCauchy;
  throw std::invalid_argument("unknown increment law: " + name);
}

void sample_increment_into(const IncrementSpec& spec, RngStream& rng, Point& out) {
  const size_t d = static_cast<size_t>(spec.d);
  out.resize(d);
  switch (spec.law) {
    case IncrementLaw::StdGaussian: {
      for (size_t i = 0; i < d; ++i) out[i] = rng.next_normal();
      return;
    }
    case IncrementLaw::UniformCube: {
      for (size_t i = 0; i < d; ++i) out[i] = (2.0 * rng.next_unit() - 1.0) * spec.param;
      return;
    }
    case IncrementLaw::UniformSphere: {
      // Normalized Gaussian direction; d == 1 collapses to the two-point
      // law on {-r, +r}, which the convexity experiments then report as
      // degenerate rather than misclassify.
      double norm2 = 0.0;
      for (size_t i = 0; i < d; ++i) {
        out[i] = rng.next_normal();
        norm2 += out[i] * out[i];
      }
      const double f = spec.param / std::sqrt(norm2);
      for (size_t i = 0; i < d; ++i) out[i] *= f;
      return;
    }
    case IncrementLaw::IsotropicCauchy: {
      double norm2 = 0.0;
      for (size_t i = 0; i < d; ++i) {
        out[i] = rng.next_normal();
        norm2 += out[i] * out[i];
      }
      const double radius = spec.param * std::tan(kPi * (rng.next_unit() - 0.5));
      const double f = radius / std::sqrt(norm2);
      for (size_t i = 0; i < d; ++i) out[i] *= f;
      return;
    }
  }
  throw std::invalid_argument("sample_increment_into: unknown law");
}

Point sample_increment(const IncrementSpec& spec, RngStream& rng) {
  spec.validate();
  Point p;
  sample_increment_into(spec, rng, p);
  return p;
}

PathSample walk_path(int d, int n, const IncrementSpec& spec, RngStream& rng) {
  spec.validate();
  if (d != spec.d) throw std::invalid_argument("walk_path: d disagrees with spec.d");
  if (n < 1) throw std::invalid_argument("walk_path: n must be >= 1");
  PathSample s;
  s.d = d;
  s.kind = PathKind::Walk;
  s.points.assign(static_cast<size_t>(n) + 1, Point(static_cast<size_t>(d), 0.0));
  Point inc;
  for (int k = 1; k <= n; ++k) {
    sample_increment_into(spec, rng, inc);
    for (int i = 0; i < d; ++i)
      s.points[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          s.points[static_cast<size_t>(k) - 1][static_cast<size_t>(i)] + inc[static_cast<size_t>(i)];
  }
  return s;
}

PathSample bridge_path_centered(int d, const IncrementSpec& spec, RngStream& rng) {
  spec.validate();
  if (d != spec.d) throw std::invalid_argument("bridge_path_centered: d disagrees with spec.d");
  const size_t m = static_cast<size_t>(d) + 2;  // increments
  PathSample s;
  s.d = d;
  s.kind = PathKind::Bridge;
  s.points.assign(m + 1, Point(static_cast<size_t>(d), 0.0));

  std::vector<Point> inc(m);
  Point mean(static_cast<size_t>(d), 0.0);
  for (size_t k = 0; k < m; ++k) {
    sample_increment_into(spec, rng, inc[k]);
    for (int i = 0; i < d; ++i) mean[static_cast<size_t>(i)] += inc[k][static_cast<size_t>(i)];
  }
  for (int i = 0; i < d; ++i) mean[static_cast<size_t>(i)] /= static_cast<double>(m);
  for (size_t k = 0; k < m; ++k)
    for (int i = 0; i < d; ++i)
      s.points[k + 1][static_cast<size_t>(i)] =
          s.points[k][static_cast<size_t>(i)] + inc[k][static_cast<size_t>(i)] - mean[static_cast<size_t>(i)];
  return s;
}

std::vector<std::vector<long long>> random_zero_sum_integer_set(int d, long long coord_bound,
                                                                RngStream& rng) {
  if (d < 1) throw std::invalid_argument("random_zero_sum_integer_set: d must be >= 1");
  if (coord_bound < 1) throw std::invalid_argument("random_zero_sum_integer_set: coord_bound must be >= 1");
  const size_t m = static_cast<size_t>(d) + 2;
  std::vector<std::vector<long long>> v(m, std::vector<long long>(static_cast<size_t>(d), 0));
  for (size_t k = 0; k + 1 < m; ++k)
    for (int i = 0; i < d; ++i) {
      const long long x = rng.next_int(-coord_bound, coord_bound);
      v[k][static_cast<size_t>(i)] = x;
      v[m - 1][static_cast<size_t>(i)] -= x;
    }
  return v;
}

}  // namespace sylvester
