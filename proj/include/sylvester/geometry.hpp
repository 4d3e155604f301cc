#pragma once

#include "sylvester/bigint.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace sylvester {

using Point = std::vector<double>;
using RatPoint = std::vector<BigRat>;

// Coefficients of an affine dependence whose magnitude falls below this
// (relative to the largest coefficient) make the classification unreliable,
// so the configuration is reported Degenerate instead of being guessed at.
inline constexpr double kSignTolerance = 1e-9;

// Feasibility threshold for the phase-1 simplex used by is_hull_vertex.
inline constexpr double kLpTolerance = 1e-9;

enum class PositionKind { Convex, NotConvex, Degenerate };

struct ConvexPositionOutcome {
  PositionKind kind;
  // Index of the point inside the simplex of the others; -1 unless
  // kind == NotConvex.
  int inner_index;
};

// Affine dependence of d+2 points in dimension d: coefficients lambda with
// sum lambda_i = 0 and sum lambda_i p_i = 0, i.e. a null vector of the
// (d+1) x (d+2) matrix whose columns are (p_i, 1).
struct RadonResult {
  // Scaled so max |lambda_i| == 1 and the first entry with
  // |lambda_i| >= kSignTolerance is positive. Empty scaling questions only
  // arise in the degenerate case, where lambda may be left partial.
  std::vector<double> lambda;
  std::vector<int> positive_set;  // indices with lambda_i >= kSignTolerance
  std::vector<int> negative_set;  // indices with lambda_i <= -kSignTolerance
  // True when the null space is not one-dimensional at working precision or
  // some coefficient is too small to sign.
  bool degenerate;
  double min_rel_coeff;  // min |lambda_i| after scaling; 0 when degenerate early
};

struct ExactRadonResult {
  // Integer dependence vector: content 1, first nonzero entry positive.
  std::vector<BigInt> lambda;
  std::vector<int> positive_set;
  std::vector<int> negative_set;
  // True iff the null space has dimension >= 2 or some lambda_i == 0.
  bool degenerate;
};

// Requires points.size() == d + 2 where d = points[0].size() >= 1, all
// points of equal dimension; throws std::invalid_argument otherwise.
RadonResult affine_dependence(std::span<const Point> points);
ExactRadonResult affine_dependence_exact(std::span<const RatPoint> points);

// Radon dichotomy read-out: Convex iff both sign classes of the dependence
// have >= 2 elements; NotConvex(i) iff {i} is a singleton sign class, in
// which case p_i lies inside the simplex spanned by the other d+1 points.
ConvexPositionOutcome is_convex_position(std::span<const Point> points);
ConvexPositionOutcome is_convex_position_exact(std::span<const RatPoint> points);

// True iff points[index] is a vertex of conv(points), decided by a phase-1
// simplex (Bland's rule) on the system expressing points[index] as a convex
// combination of the others: infeasible means vertex.
// Throws std::invalid_argument if index is out of range or points is empty.
bool is_hull_vertex(std::size_t index, std::span<const Point> points);

// Number of hull vertices. Dispatches to a monotone-chain scan for d == 2
// (strict turns only, so collinear boundary points are not counted) and to
// the LP fold otherwise. count_hull_vertices_lp is the dimension-agnostic
// reference; the two must agree and the tests check that they do.
std::size_t count_hull_vertices(std::span<const Point> points);
std::size_t count_hull_vertices_lp(std::span<const Point> points);

// True iff every subset of d+1 points is affinely independent. The float
// test asks for the smallest singular value of each (d+1) x (d+1)
// homogeneous matrix to exceed tol; the exact test asks for a nonzero
// determinant.
bool general_position_check(std::span<const Point> points, double tol = 1e-9);
bool general_position_check_exact(std::span<const RatPoint> points);

}  // namespace sylvester
