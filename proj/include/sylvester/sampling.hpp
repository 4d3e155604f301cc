#pragma once

#include "sylvester/geometry.hpp"
#include "sylvester/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sylvester {

// Increment laws for the walk/bridge experiments. All four are full-
// dimensional and symmetric; Cauchy is the heavy-tailed stress case with no
// finite mean. The convexity results under test are distribution-free
// across all of them.
enum class IncrementLaw { StdGaussian, UniformCube, UniformSphere, IsotropicCauchy };

struct IncrementSpec {
  IncrementLaw law = IncrementLaw::StdGaussian;
  int d = 2;
  // Cube half-width, sphere radius, or Cauchy scale; unused for Gaussian.
  double param = 1.0;

  static IncrementSpec gaussian(int d);
  static IncrementSpec cube(int d, double half_width = 1.0);
  static IncrementSpec sphere(int d, double radius = 1.0);
  static IncrementSpec cauchy(int d, double scale = 1.0);

  // Throws std::invalid_argument unless d >= 1 and param > 0.
  void validate() const;
};

const char* law_name(IncrementLaw law);
// Parses the CLI grammar {gaussian|cube|sphere|cauchy}; throws
// std::invalid_argument on anything else.
IncrementLaw parse_law(const std::string& name);

enum class PathKind { Walk, Bridge };

struct PathSample {
  int d;
  PathKind kind;
  // Walk: S_0 = 0, S_1, ..., S_n (n+1 points).
  // Bridge: B_0 = 0, B_1, ..., B_{d+2} with B_{d+2} = 0 up to roundoff.
  std::vector<Point> points;
};

// One increment drawn into `out` (resized to spec.d). Every law uses a
// fixed deterministic transform of the stream (Box-Muller normals, tangent
// for the Cauchy radius, affine map for the cube), never rejection, so the
// stream position after a draw depends only on the request sequence.
void sample_increment_into(const IncrementSpec& spec, RngStream& rng, Point& out);
Point sample_increment(const IncrementSpec& spec, RngStream& rng);

// Partial sums of n iid increments, starting at the origin.
// Throws std::invalid_argument if n < 1 or spec is invalid.
PathSample walk_path(int d, int n, const IncrementSpec& spec, RngStream& rng);

// Exchangeable bridge: draws d+2 iid increments, recenters them by their
// mean so they sum to zero exactly (up to roundoff), and returns the d+3
// partial sums B_0 = 0, ..., B_{d+2} = 0.
PathSample bridge_path_centered(int d, const IncrementSpec& spec, RngStream& rng);

// d+2 integer vectors that sum to zero: the first d+1 are uniform on
// [-coord_bound, coord_bound]^d, the last is minus their sum (so its
// entries can reach (d+1) * coord_bound). One draw, no genericity screen;
// the permutation oracle rejects and redraws on degeneracy.
// Throws std::invalid_argument if d < 1 or coord_bound < 1.
std::vector<std::vector<long long>> random_zero_sum_integer_set(int d, long long coord_bound,
                                                                RngStream& rng);

}  // namespace sylvester
