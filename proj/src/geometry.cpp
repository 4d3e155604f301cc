#include "sylvester/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sylvester {

namespace {

// Relative threshold for rank decisions inside the float elimination. Kept
// well below kSignTolerance so that rank deficiency is the rarer verdict;
// near-degenerate inputs fall through to the min_rel_coeff check instead.
constexpr double kPivotRel = 1e-13;

size_t checked_dimension(std::span<const Point> points, size_t expected_count) {
  if (points.empty()) throw std::invalid_argument("point set is empty");
  const size_t d = points[0].size();
  if (d < 1) throw std::invalid_argument("points must have dimension >= 1");
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("points have mixed dimensions");
  if (expected_count != 0 && points.size() != expected_count)
    throw std::invalid_argument("affine dependence needs exactly d+2 points");
  return d;
}

size_t checked_dimension_exact(std::span<const RatPoint> points, size_t expected_count) {
  if (points.empty()) throw std::invalid_argument("point set is empty");
  const size_t d = points[0].size();
  if (d < 1) throw std::invalid_argument("points must have dimension >= 1");
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("points have mixed dimensions");
  if (expected_count != 0 && points.size() != expected_count)
    throw std::invalid_argument("affine dependence needs exactly d+2 points");
  return d;
}

ConvexPositionOutcome classify_sign_sets(bool degenerate, const std::vector<int>& pos,
                                         const std::vector<int>& neg) {
  if (degenerate) return {PositionKind::Degenerate, -1};
  if (pos.size() == 1 && neg.size() >= 2) return {PositionKind::NotConvex, pos[0]};
  if (neg.size() == 1 && pos.size() >= 2) return {PositionKind::NotConvex, neg[0]};
  if (pos.size() >= 2 && neg.size() >= 2) return {PositionKind::Convex, -1};
  return {PositionKind::Degenerate, -1};  // not reachable for a signed dependence
}

}  // namespace

RadonResult affine_dependence(std::span<const Point> points) {
  const size_t d = checked_dimension(points, points.empty() ? 1 : points[0].size() + 2);
  const int rows = static_cast<int>(d) + 1;
  const int cols = static_cast<int>(d) + 2;

  // Homogeneous matrix: column j is (p_j, 1).
  std::vector<double> a(static_cast<size_t>(rows) * cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i + 1 < rows; ++i) a[static_cast<size_t>(i) * cols + j] = points[j][i];
    a[static_cast<size_t>(rows - 1) * cols + j] = 1.0;
  }
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::fabs(v));
  const double pivot_tol = scale * kPivotRel;

  RadonResult res;
  res.lambda.assign(static_cast<size_t>(cols), 0.0);
  res.degenerate = false;
  res.min_rel_coeff = 0.0;

  // Row echelon form with partial pivoting; columns skipped for lack of a
  // usable pivot are free.
  std::vector<int> pivot_col_of_row(static_cast<size_t>(rows), -1);
  std::vector<char> is_pivot_col(static_cast<size_t>(cols), 0);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = r;
    for (int i = r + 1; i < rows; ++i)
      if (std::fabs(a[static_cast<size_t>(i) * cols + c]) >
          std::fabs(a[static_cast<size_t>(best) * cols + c]))
        best = i;
    if (std::fabs(a[static_cast<size_t>(best) * cols + c]) <= pivot_tol) continue;
    if (best != r)
      for (int k = c; k < cols; ++k)
        std::swap(a[static_cast<size_t>(best) * cols + k], a[static_cast<size_t>(r) * cols + k]);
    const double piv = a[static_cast<size_t>(r) * cols + c];
    for (int i = r + 1; i < rows; ++i) {
      const double f = a[static_cast<size_t>(i) * cols + c] / piv;
      if (f == 0.0) continue;
      a[static_cast<size_t>(i) * cols + c] = 0.0;
      for (int k = c + 1; k < cols; ++k)
        a[static_cast<size_t>(i) * cols + k] -= f * a[static_cast<size_t>(r) * cols + k];
    }
    pivot_col_of_row[static_cast<size_t>(r)] = c;
    is_pivot_col[static_cast<size_t>(c)] = 1;
    ++r;
  }

  if (r < rows) {
    // Null space of dimension >= 2: no single dependence to sign.
    res.degenerate = true;
    return res;
  }

  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot_col[static_cast<size_t>(c)]) free_col = c;
  res.lambda[static_cast<size_t>(free_col)] = 1.0;
  for (int i = rows - 1; i >= 0; --i) {
    const int pc = pivot_col_of_row[static_cast<size_t>(i)];
    double s = 0.0;
    for (int k = pc + 1; k < cols; ++k)
      s += a[static_cast<size_t>(i) * cols + k] * res.lambda[static_cast<size_t>(k)];
    res.lambda[static_cast<size_t>(pc)] = -s / a[static_cast<size_t>(i) * cols + pc];
  }

  double max_abs = 0.0;
  for (double v : res.lambda) max_abs = std::max(max_abs, std::fabs(v));
  for (double& v : res.lambda) v /= max_abs;
  for (double v : res.lambda) {
    if (std::fabs(v) < kSignTolerance) continue;
    if (v < 0.0)
      for (double& w : res.lambda) w = -w;
    break;
  }

  double min_abs = std::numeric_limits<double>::infinity();
  for (double v : res.lambda) min_abs = std::min(min_abs, std::fabs(v));
  res.min_rel_coeff = min_abs;
  if (min_abs < kSignTolerance) res.degenerate = true;
  for (int i = 0; i < cols; ++i) {
    const double v = res.lambda[static_cast<size_t>(i)];
    if (v >= kSignTolerance)
      res.positive_set.push_back(i);
    else if (v <= -kSignTolerance)
      res.negative_set.push_back(i);
  }
  return res;
}

ExactRadonResult affine_dependence_exact(std::span<const RatPoint> points) {
  const size_t d = checked_dimension_exact(points, points.empty() ? 1 : points[0].size() + 2);
  const int rows = static_cast<int>(d) + 1;
  const int cols = static_cast<int>(d) + 2;

  std::vector<BigRat> a(static_cast<size_t>(rows) * cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i + 1 < rows; ++i) a[static_cast<size_t>(i) * cols + j] = points[j][i];
    a[static_cast<size_t>(rows - 1) * cols + j] = 1;
  }

  ExactRadonResult res;
  res.degenerate = false;

  std::vector<int> pivot_col_of_row(static_cast<size_t>(rows), -1);
  std::vector<char> is_pivot_col(static_cast<size_t>(cols), 0);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv_row = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<size_t>(i) * cols + c] != 0) {
        piv_row = i;
        break;
      }
    if (piv_row < 0) continue;
    if (piv_row != r)
      for (int k = c; k < cols; ++k)
        std::swap(a[static_cast<size_t>(piv_row) * cols + k], a[static_cast<size_t>(r) * cols + k]);
    const BigRat piv = a[static_cast<size_t>(r) * cols + c];
    for (int i = r + 1; i < rows; ++i) {
      if (a[static_cast<size_t>(i) * cols + c] == 0) continue;
      const BigRat f = a[static_cast<size_t>(i) * cols + c] / piv;
      a[static_cast<size_t>(i) * cols + c] = 0;
      for (int k = c + 1; k < cols; ++k)
        a[static_cast<size_t>(i) * cols + k] -= f * a[static_cast<size_t>(r) * cols + k];
    }
    pivot_col_of_row[static_cast<size_t>(r)] = c;
    is_pivot_col[static_cast<size_t>(c)] = 1;
    ++r;
  }

  if (r < rows) {
    res.degenerate = true;
    return res;
  }

  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot_col[static_cast<size_t>(c)]) free_col = c;
  std::vector<BigRat> lam(static_cast<size_t>(cols), BigRat(0));
  lam[static_cast<size_t>(free_col)] = 1;
  for (int i = rows - 1; i >= 0; --i) {
    const int pc = pivot_col_of_row[static_cast<size_t>(i)];
    BigRat s = 0;
    for (int k = pc + 1; k < cols; ++k)
      s += a[static_cast<size_t>(i) * cols + k] * lam[static_cast<size_t>(k)];
    lam[static_cast<size_t>(pc)] = -s / a[static_cast<size_t>(i) * cols + pc];
  }

  // Clear denominators, divide out the content, fix the sign.
  BigInt common = 1;
  for (const auto& q : lam)
    common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(q));
  res.lambda.resize(static_cast<size_t>(cols));
  for (int i = 0; i < cols; ++i)
    res.lambda[static_cast<size_t>(i)] =
        boost::multiprecision::numerator(BigRat(lam[static_cast<size_t>(i)] * common));
  BigInt content = 0;
  for (const auto& v : res.lambda) content = boost::multiprecision::gcd(content, v);
  if (content > 1)
    for (auto& v : res.lambda) v /= content;
  for (const auto& v : res.lambda) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : res.lambda) w = -w;
    break;
  }

  for (int i = 0; i < cols; ++i) {
    const BigInt& v = res.lambda[static_cast<size_t>(i)];
    if (v > 0)
      res.positive_set.push_back(i);
    else if (v < 0)
      res.negative_set.push_back(i);
    else
      res.degenerate = true;
  }
  return res;
}

ConvexPositionOutcome is_convex_position(std::span<const Point> points) {
  RadonResult dep = affine_dependence(points);
  return classify_sign_sets(dep.degenerate, dep.positive_set, dep.negative_set);
}

ConvexPositionOutcome is_convex_position_exact(std::span<const RatPoint> points) {
  ExactRadonResult dep = affine_dependence_exact(points);
  return classify_sign_sets(dep.degenerate, dep.positive_set, dep.negative_set);
}

namespace {

// Phase-1 simplex feasibility of { A w = b, w >= 0 }, A dense rows x m.
// Rows are rescaled to unit max magnitude and oriented so b >= 0; the
// artificial variables form the starting basis. Entering variable: lowest
// structural index with negative reduced cost (Bland); leaving variable:
// minimum ratio, ties by lowest basis index. Feasible iff the residual
// artificial mass at optimum is below kLpTolerance.
bool lp_feasible(std::vector<double>& t, int rows, int m) {
  const int cols = m + rows + 1;  // structural | artificial | rhs
  const int rhs = cols - 1;
  auto at = [&](int i, int j) -> double& { return t[static_cast<size_t>(i) * cols + j]; };

  for (int i = 0; i < rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s = std::max(s, std::fabs(at(i, j)));
    s = std::max(s, std::fabs(at(i, rhs)));
    if (s > 0.0) {
      for (int j = 0; j < m; ++j) at(i, j) /= s;
      at(i, rhs) /= s;
    }
    if (at(i, rhs) < 0.0) {
      for (int j = 0; j < m; ++j) at(i, j) = -at(i, j);
      at(i, rhs) = -at(i, rhs);
    }
    at(i, m + i) = 1.0;
  }

  std::vector<int> basis(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) basis[static_cast<size_t>(i)] = m + i;

  // Reduced costs for cost = sum of artificials; artificial columns start
  // basic with reduced cost 0 and never re-enter.
  std::vector<double> obj(static_cast<size_t>(m), 0.0);
  for (int j = 0; j < m; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows; ++i) s += at(i, j);
    obj[static_cast<size_t>(j)] = -s;
  }
  std::vector<char> eligible(static_cast<size_t>(m), 1);

  const long max_iter = 2000L * (m + rows) + 2000L;
  for (long iter = 0;; ++iter) {
    if (iter > max_iter) throw std::runtime_error("lp_feasible: iteration cap exceeded");
    int e = -1;
    for (int j = 0; j < m; ++j)
      if (eligible[static_cast<size_t>(j)] && obj[static_cast<size_t>(j)] < -1e-12) {
        e = j;
        break;
      }
    if (e < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows; ++i) {
      const double piv = at(i, e);
      if (piv <= 1e-11) continue;
      const double ratio = at(i, rhs) / piv;
      if (leave < 0 || ratio < best_ratio - 1e-15 ||
          (std::fabs(ratio - best_ratio) <= 1e-15 &&
           basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)]))
        leave = i, best_ratio = ratio;
    }
    if (leave < 0) {
      // Numerically no usable pivot in this column; a bounded phase-1
      // objective cannot actually be unbounded, so retire the column.
      eligible[static_cast<size_t>(e)] = 0;
      continue;
    }

    const double piv = at(leave, e);
    for (int j = 0; j < cols; ++j) at(leave, j) /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave) continue;
      const double f = at(i, e);
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) at(i, j) -= f * at(leave, j);
    }
    const double fo = obj[static_cast<size_t>(e)];
    if (fo != 0.0)
      for (int j = 0; j < m; ++j) obj[static_cast<size_t>(j)] -= fo * at(leave, j);
    basis[static_cast<size_t>(leave)] = e;
  }

  double artificial_mass = 0.0;
  for (int i = 0; i < rows; ++i)
    if (basis[static_cast<size_t>(i)] >= m) artificial_mass += at(i, rhs);
  return artificial_mass <= kLpTolerance;
}

}  // namespace

bool is_hull_vertex(std::size_t index, std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("is_hull_vertex: empty point set");
  if (index >= points.size()) throw std::invalid_argument("is_hull_vertex: index out of range");
  const size_t d = checked_dimension(points, 0);
  const int m = static_cast<int>(points.size()) - 1;
  if (m == 0) return true;
  const int rows = static_cast<int>(d) + 1;
  const int cols = m + rows + 1;

  // Feasibility of: sum_j w_j p_j = p_index, sum_j w_j = 1, w >= 0 over the
  // other points. Feasible means p_index is a convex combination, hence not
  // a vertex.
  std::vector<double> t(static_cast<size_t>(rows) * cols, 0.0);
  int col = 0;
  for (size_t j = 0; j < points.size(); ++j) {
    if (j == index) continue;
    for (int i = 0; i + 1 < rows; ++i)
      t[static_cast<size_t>(i) * cols + col] = points[j][static_cast<size_t>(i)];
    t[static_cast<size_t>(rows - 1) * cols + col] = 1.0;
    ++col;
  }
  for (int i = 0; i + 1 < rows; ++i)
    t[static_cast<size_t>(i) * cols + (cols - 1)] = points[index][static_cast<size_t>(i)];
  t[static_cast<size_t>(rows - 1) * cols + (cols - 1)] = 1.0;

  return !lp_feasible(t, rows, m);
}

namespace {

std::size_t hull_count_2d(std::span<const Point> points) {
  std::vector<std::array<double, 2>> p;
  p.reserve(points.size());
  for (const auto& q : points) p.push_back({q[0], q[1]});
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const size_t n = p.size();
  if (n <= 2) return n;

  auto cross = [](const std::array<double, 2>& o, const std::array<double, 2>& a,
                  const std::array<double, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };

  // Monotone chain keeping strict turns only, so collinear boundary points
  // are dropped and the count matches the vertex LP on generic input.
  std::vector<std::array<double, 2>> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p[i]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  return k - 1;  // first point appears at both ends
}

}  // namespace

std::size_t count_hull_vertices(std::span<const Point> points) {
  const size_t d = checked_dimension(points, 0);
  if (d == 2) return hull_count_2d(points);
  return count_hull_vertices_lp(points);
}

std::size_t count_hull_vertices_lp(std::span<const Point> points) {
  checked_dimension(points, 0);
  std::size_t count = 0;
  for (size_t i = 0; i < points.size(); ++i)
    if (is_hull_vertex(i, points)) ++count;
  return count;
}

namespace {

// Smallest singular value of a k x k matrix via one-sided Jacobi: rotate
// column pairs until mutually orthogonal, then read off column norms.
double min_singular_value(std::vector<double>& a, int k) {
  auto colv = [&](int j, int i) -> double& { return a[static_cast<size_t>(i) * k + j]; };
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < k - 1; ++p) {
      for (int q = p + 1; q < k; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int i = 0; i < k; ++i) {
          app += colv(p, i) * colv(p, i);
          aqq += colv(q, i) * colv(q, i);
          apq += colv(p, i) * colv(q, i);
        }
        if (std::fabs(apq) <= 1e-30 + 1e-15 * std::sqrt(app * aqq)) continue;
        const double theta = 0.5 * std::atan2(2.0 * apq, app - aqq);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int i = 0; i < k; ++i) {
          const double vp = colv(p, i), vq = colv(q, i);
          colv(p, i) = c * vp + s * vq;
          colv(q, i) = -s * vp + c * vq;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  double smin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < k; ++j) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += colv(j, i) * colv(j, i);
    smin = std::min(smin, std::sqrt(s));
  }
  return smin;
}

// Visits all subsets of size r from {0..n-1}; f gets the index buffer.
template <typename F>
void for_each_subset(size_t n, size_t r, F&& f) {
  std::vector<size_t> idx(r);
  for (size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx);
    size_t i = r;
    while (i-- > 0) {
      if (idx[i] != i + n - r) {
        ++idx[i];
        for (size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

bool general_position_check(std::span<const Point> points, double tol) {
  const size_t d = checked_dimension(points, 0);
  const size_t r = d + 1;
  if (points.size() < r) return true;
  bool ok = true;
  for_each_subset(points.size(), r, [&](const std::vector<size_t>& idx) {
    if (!ok) return;
    const int k = static_cast<int>(r);
    std::vector<double> m(static_cast<size_t>(k) * k);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i + 1 < k; ++i)
        m[static_cast<size_t>(i) * k + j] = points[idx[static_cast<size_t>(j)]][static_cast<size_t>(i)];
      m[static_cast<size_t>(k - 1) * k + j] = 1.0;
    }
    if (min_singular_value(m, k) <= tol) ok = false;
  });
  return ok;
}

bool general_position_check_exact(std::span<const RatPoint> points) {
  const size_t d = checked_dimension_exact(points, 0);
  const size_t r = d + 1;
  if (points.size() < r) return true;
  bool ok = true;
  for_each_subset(points.size(), r, [&](const std::vector<size_t>& idx) {
    if (!ok) return;
    const int k = static_cast<int>(r);
    std::vector<BigRat> m(static_cast<size_t>(k) * k);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i + 1 < k; ++i)
        m[static_cast<size_t>(i) * k + j] = points[idx[static_cast<size_t>(j)]][static_cast<size_t>(i)];
      m[static_cast<size_t>(k - 1) * k + j] = 1;
    }
    // Exact determinant by elimination.
    BigRat det = 1;
    for (int c = 0; c < k; ++c) {
      int piv = -1;
      for (int i = c; i < k; ++i)
        if (m[static_cast<size_t>(i) * k + c] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != c) {
        for (int j = c; j < k; ++j)
          std::swap(m[static_cast<size_t>(piv) * k + j], m[static_cast<size_t>(c) * k + j]);
        det = -det;
      }
      const BigRat pv = m[static_cast<size_t>(c) * k + c];
      det *= pv;
      for (int i = c + 1; i < k; ++i) {
        if (m[static_cast<size_t>(i) * k + c] == 0) continue;
        const BigRat f = m[static_cast<size_t>(i) * k + c] / pv;
        for (int j = c; j < k; ++j)
          m[static_cast<size_t>(i) * k + j] -= f * m[static_cast<size_t>(c) * k + j];
      }
    }
    if (det == 0) ok = false;
  });
  return ok;
}

}  // namespace sylvester
