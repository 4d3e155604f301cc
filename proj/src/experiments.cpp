#include "sylvester/experiments.hpp"

#include "sylvester/stats.hpp"
#include "sylvester/stirling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace sylvester {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fingerprint(uint64_t seed) {
  const auto b = philox::block(seed, 0, 0);
  char buf[36];
  std::snprintf(buf, sizeof buf, "%08x%08x%08x%08x", b[0], b[1], b[2], b[3]);
  return buf;
}

void tally_outcome(const ConvexPositionOutcome& out, ChunkTally& t) {
  switch (out.kind) {
    case PositionKind::Convex: ++t.convex; break;
    case PositionKind::NotConvex: ++t.nonconvex; break;
    case PositionKind::Degenerate: ++t.degenerate; break;
  }
}

// Shared post-processing for the convex/not-convex counting experiments.
// z and the acceptance band use the theoretical variance; the reported
// interval is the Wilson score interval around the estimate.
ExperimentReport finalize_proportion(const ExperimentConfig& cfg, const ChunkTally& t,
                                     TheoryValue theory, Clock::time_point start) {
  ExperimentReport r;
  r.config = cfg;
  r.theory = std::move(theory);
  r.trials_total = cfg.samples;
  r.trials_degenerate = t.degenerate;
  r.trials_classified = t.convex + t.nonconvex;
  const double p = r.theory.approx;
  if (r.trials_classified > 0) {
    r.estimate = static_cast<double>(t.convex) / static_cast<double>(r.trials_classified);
    const Interval ci = wilson_interval(t.convex, r.trials_classified);
    r.ci_low = ci.low;
    r.ci_high = ci.high;
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(r.trials_classified));
    if (se > 0.0) {
      r.z = (r.estimate - p) / se;
      r.tolerance_band = 4.0 * se;
      r.tolerance_ok = std::fabs(r.estimate - p) < r.tolerance_band;
    } else {
      // Theory pins the proportion to 0 or 1 exactly (d == 1).
      r.z = 0.0;
      r.tolerance_band = 0.0;
      r.tolerance_ok = r.estimate == p;
    }
  }
  r.rng_fingerprint = fingerprint(cfg.seed);
  r.wall_ms = elapsed_ms(start);
  return r;
}

}  // namespace

const char* mode_name(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::WalkConvexity: return "walk";
    case ExperimentMode::BridgeConvexity: return "bridge";
    case ExperimentMode::VertexCount: return "vertices";
    case ExperimentMode::PermutationOracle: return "oracle";
    case ExperimentMode::Baseline: return "baseline";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (d < 1) throw std::invalid_argument("config: d must be >= 1");
  if (samples < 1) throw std::invalid_argument("config: samples must be >= 1");
  if (workers < 0) throw std::invalid_argument("config: workers must be >= 0");
  if (!(law_param > 0.0)) throw std::invalid_argument("config: law parameter must be positive");
  switch (mode) {
    case ExperimentMode::VertexCount:
      if (n < 1) throw std::invalid_argument("config: vertices mode needs n >= 1");
      break;
    case ExperimentMode::PermutationOracle:
      if (d > 6) throw std::invalid_argument("config: oracle mode supports d <= 6");
      if (coord_bound < 1) throw std::invalid_argument("config: coord_bound must be >= 1");
      break;
    case ExperimentMode::Baseline:
      if (!classical_constants().count(baseline_target))
        throw std::invalid_argument("config: unknown baseline target '" + baseline_target + "'");
      break;
    default:
      break;
  }
}

ExperimentReport run_walk_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const IncrementSpec spec = config.increment_spec();
  spec.validate();
  const int d = config.d;

  auto kernel = [spec, d](RngStream& rng, uint64_t count, ChunkTally& t) {
    const size_t dim = static_cast<size_t>(d);
    const size_t npts = dim + 2;  // S_0 .. S_{d+1}
    std::vector<Point> pts(npts, Point(dim, 0.0));
    Point inc(dim);
    for (uint64_t s = 0; s < count; ++s) {
      for (size_t k = 1; k < npts; ++k) {
        sample_increment_into(spec, rng, inc);
        for (size_t i = 0; i < dim; ++i) pts[k][i] = pts[k - 1][i] + inc[i];
      }
      tally_outcome(is_convex_position(pts), t);
    }
  };
  const ChunkTally tally = accumulate_chunks(config.samples, config.seed, config.workers, kernel);
  return finalize_proportion(config, tally, convex_position_probability(d), start);
}

ExperimentReport run_bridge_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const IncrementSpec spec = config.increment_spec();
  spec.validate();
  const int d = config.d;

  auto kernel = [spec, d](RngStream& rng, uint64_t count, ChunkTally& t) {
    const size_t dim = static_cast<size_t>(d);
    const size_t m = dim + 2;  // increments; classified points are B_0..B_{d+1}
    std::vector<Point> inc(m, Point(dim, 0.0));
    std::vector<Point> pts(m, Point(dim, 0.0));
    Point mean(dim, 0.0);
    for (uint64_t s = 0; s < count; ++s) {
      std::fill(mean.begin(), mean.end(), 0.0);
      for (size_t k = 0; k < m; ++k) {
        sample_increment_into(spec, rng, inc[k]);
        for (size_t i = 0; i < dim; ++i) mean[i] += inc[k][i];
      }
      for (size_t i = 0; i < dim; ++i) mean[i] /= static_cast<double>(m);
      for (size_t i = 0; i < dim; ++i) pts[0][i] = 0.0;
      for (size_t k = 1; k < m; ++k)
        for (size_t i = 0; i < dim; ++i) pts[k][i] = pts[k - 1][i] + inc[k - 1][i] - mean[i];
      tally_outcome(is_convex_position(pts), t);
    }
  };
  const ChunkTally tally = accumulate_chunks(config.samples, config.seed, config.workers, kernel);
  return finalize_proportion(config, tally, convex_position_probability(d), start);
}

ExperimentReport run_vertex_count_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const IncrementSpec spec = config.increment_spec();
  spec.validate();
  const int d = config.d;
  const int n = config.n;

  auto kernel = [spec, d, n](RngStream& rng, uint64_t count, ChunkTally& t) {
    const size_t dim = static_cast<size_t>(d);
    std::vector<Point> pts(static_cast<size_t>(n) + 1, Point(dim, 0.0));
    Point inc(dim);
    for (uint64_t s = 0; s < count; ++s) {
      for (size_t k = 1; k <= static_cast<size_t>(n); ++k) {
        sample_increment_into(spec, rng, inc);
        for (size_t i = 0; i < dim; ++i) pts[k][i] = pts[k - 1][i] + inc[i];
      }
      const uint64_t c = count_hull_vertices(pts);
      t.value_sum += c;
      t.value_sumsq += c * c;
    }
  };
  const ChunkTally tally = accumulate_chunks(config.samples, config.seed, config.workers, kernel);

  ExperimentReport r;
  r.config = config;
  r.theory = expected_vertices_walk(n, d);
  r.trials_total = config.samples;
  r.trials_classified = config.samples;
  r.trials_degenerate = 0;
  const double nn = static_cast<double>(config.samples);
  const double mean = static_cast<double>(tally.value_sum) / nn;
  r.estimate = mean;
  double se = 0.0;
  if (config.samples > 1) {
    const double var =
        (static_cast<double>(tally.value_sumsq) - nn * mean * mean) / (nn - 1.0);
    se = std::sqrt(std::max(var, 0.0) / nn);
  }
  const Interval ci = mean_interval(mean, se);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  const double mu = r.theory.approx;
  r.z = se > 0.0 ? (mean - mu) / se : 0.0;
  r.tolerance_band = 4.0 * se;
  r.tolerance_ok = se > 0.0 ? std::fabs(mean - mu) < r.tolerance_band : mean == mu;
  r.rng_fingerprint = fingerprint(config.seed);
  r.wall_ms = elapsed_ms(start);
  return r;
}

ExperimentReport run_baseline_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const std::string& target = config.baseline_target;
  const TheoryValue theory = classical_constants().at(target);
  const int d = (target == "gaussian_d3") ? 3 : 2;

  enum class Target { Triangle, Disk, Gaussian };
  const Target kind = (target == "triangle") ? Target::Triangle
                      : (target == "disk")   ? Target::Disk
                                             : Target::Gaussian;

  auto kernel = [kind, d](RngStream& rng, uint64_t count, ChunkTally& t) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const size_t dim = static_cast<size_t>(d);
    const size_t npts = dim + 2;
    std::vector<Point> pts(npts, Point(dim, 0.0));
    for (uint64_t s = 0; s < count; ++s) {
      for (size_t k = 0; k < npts; ++k) {
        switch (kind) {
          case Target::Triangle: {
            // Uniform on the triangle (0,0), (1,0), (0,1).
            const double a = std::sqrt(rng.next_unit());
            const double v = rng.next_unit();
            pts[k][0] = a * (1.0 - v);
            pts[k][1] = a * v;
            break;
          }
          case Target::Disk: {
            const double rad = std::sqrt(rng.next_unit());
            const double ang = kTwoPi * rng.next_unit();
            pts[k][0] = rad * std::cos(ang);
            pts[k][1] = rad * std::sin(ang);
            break;
          }
          case Target::Gaussian: {
            for (size_t i = 0; i < dim; ++i) pts[k][i] = rng.next_normal();
            break;
          }
        }
      }
      tally_outcome(is_convex_position(pts), t);
    }
  };
  ExperimentConfig echo = config;
  echo.d = d;
  const ChunkTally tally = accumulate_chunks(config.samples, config.seed, config.workers, kernel);
  return finalize_proportion(echo, tally, theory, start);
}

OracleCertificate run_permutation_oracle(int d, long long coord_bound, uint64_t seed,
                                         uint64_t stream) {
  if (d < 1 || d > 6) throw std::invalid_argument("run_permutation_oracle: d must be in [1, 6]");
  if (coord_bound < 1)
    throw std::invalid_argument("run_permutation_oracle: coord_bound must be >= 1");

  RngStream rng(seed, stream);
  const size_t m = static_cast<size_t>(d) + 2;
  const TheoryValue theory = convex_position_probability(d);

  for (uint64_t attempt = 0; attempt < 10000; ++attempt) {
    const auto inc = random_zero_sum_integer_set(d, coord_bound, rng);

    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt convex = 0, total = 0;
    bool degenerate_seen = false;
    std::vector<RatPoint> pts(m, RatPoint(static_cast<size_t>(d)));
    std::vector<long long> acc(static_cast<size_t>(d));
    do {
      // Classified points are B_0 = 0 and the first d+1 partial sums; the
      // final sum returns to B_0 exactly and is not repeated.
      std::fill(acc.begin(), acc.end(), 0);
      for (size_t i = 0; i < static_cast<size_t>(d); ++i) pts[0][i] = 0;
      for (size_t k = 0; k + 1 < m; ++k) {
        for (size_t i = 0; i < static_cast<size_t>(d); ++i) {
          acc[i] += inc[static_cast<size_t>(perm[k])][i];
          pts[k + 1][i] = acc[i];
        }
      }
      const auto out = is_convex_position_exact(pts);
      if (out.kind == PositionKind::Degenerate) {
        degenerate_seen = true;
        break;
      }
      if (out.kind == PositionKind::Convex) ++convex;
      ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (degenerate_seen) continue;

    OracleCertificate cert;
    cert.d = d;
    cert.coord_bound = coord_bound;
    cert.seed = seed;
    cert.stream = stream;
    cert.increments = inc;
    cert.rejected_sets = attempt;
    cert.convex_count = convex;
    cert.total = total;
    cert.probability = BigRat(convex, total);
    cert.matches_theory = theory.exact.has_value() && cert.probability == *theory.exact;
    return cert;
  }
  throw std::runtime_error("run_permutation_oracle: rejected 10000 candidate sets in a row");
}

ExperimentReport run_oracle_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = Clock::now();
  ExperimentReport r;
  r.config = config;
  r.theory = convex_position_probability(config.d);

  BigInt convex = 0, total = 0;
  bool all_match = true;
  for (uint64_t j = 0; j < config.samples; ++j) {
    OracleCertificate cert =
        run_permutation_oracle(config.d, config.coord_bound, config.seed, j);
    convex += cert.convex_count;
    total += cert.total;
    all_match = all_match && cert.matches_theory;
    r.certificates.push_back(std::move(cert));
  }
  const BigRat prob(convex, total);
  r.estimate = to_double(prob);
  r.ci_low = r.estimate;
  r.ci_high = r.estimate;
  r.z = 0.0;
  r.tolerance_band = 0.0;
  r.tolerance_ok = all_match;
  r.trials_total = total.convert_to<uint64_t>();
  r.trials_classified = r.trials_total;
  r.trials_degenerate = 0;
  r.rng_fingerprint = fingerprint(config.seed);
  r.wall_ms = elapsed_ms(start);
  return r;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  switch (config.mode) {
    case ExperimentMode::WalkConvexity: return run_walk_experiment(config);
    case ExperimentMode::BridgeConvexity: return run_bridge_experiment(config);
    case ExperimentMode::VertexCount: return run_vertex_count_experiment(config);
    case ExperimentMode::PermutationOracle: return run_oracle_experiment(config);
    case ExperimentMode::Baseline: return run_baseline_experiment(config);
  }
  throw std::invalid_argument("run_experiment: unknown mode");
}

namespace {

// Cycle-count census over all permutations of n elements, the independent
// combinatorial meaning of the Stirling recurrence.
std::vector<BigInt> cycle_census(int n) {
  std::vector<BigInt> counts(static_cast<size_t>(n) + 1, BigInt(0));
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(static_cast<size_t>(n));
  do {
    std::fill(seen.begin(), seen.end(), 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      ++cycles;
      for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)])
        seen[static_cast<size_t>(j)] = 1;
    }
    ++counts[static_cast<size_t>(cycles)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

}  // namespace

IdentitySuiteResult run_identity_suite(int row_sum_max, int half_row_max, int generating_max,
                                       int accounting_max) {
  const auto start = Clock::now();
  IdentitySuiteResult res;
  const int table_max =
      std::max({row_sum_max, half_row_max, generating_max, accounting_max + 2, 8});
  StirlingTable table(table_max);

  {
    bool ok = true;
    for (int n = 0; n <= row_sum_max && ok; ++n) {
      BigInt sum = 0;
      for (int mm = 0; mm <= n; ++mm) sum += table.entry(n, mm);
      ok = sum == factorial(static_cast<unsigned>(n));
    }
    res.checks.push_back({"stirling_row_sums",
                          ok,
                          "sum_m entry(n, m) == n! for n <= " + std::to_string(row_sum_max)});
  }
  {
    bool ok = true;
    for (int n = 2; n <= half_row_max && ok; ++n) ok = half_row_identity_check(n);
    res.checks.push_back({"half_row",
                          ok,
                          "2 (entry(n, n) + entry(n, n-2) + ...) == n! for 2 <= n <= " +
                              std::to_string(half_row_max)});
  }
  {
    bool ok = true;
    for (int n = 0; n <= generating_max && ok; ++n) {
      for (int t = -3; t <= 3 && ok; ++t) {
        BigRat lhs = 0, power = 1;
        const BigRat tq(t);
        for (int mm = 0; mm <= n; ++mm) {
          lhs += BigRat(table.entry(n, mm)) * power;
          power *= tq;
        }
        ok = lhs == rising_factorial(n, tq);
      }
    }
    res.checks.push_back({"generating_identity",
                          ok,
                          "sum_m entry(n, m) t^m == t(t+1)...(t+n-1) for n <= " +
                              std::to_string(generating_max) + ", integer |t| <= 3"});
  }
  {
    bool ok = true;
    for (int n = 0; n <= 8 && ok; ++n) {
      const auto census = cycle_census(n);
      for (int mm = 0; mm <= n && ok; ++mm)
        ok = census[static_cast<size_t>(mm)] == table.entry(n, mm);
    }
    res.checks.push_back(
        {"cycle_census", ok, "entry(n, m) counts m-cycle permutations for n <= 8"});
  }
  {
    bool ok = true;
    for (int d = 1; d <= accounting_max && ok; ++d) {
      const TheoryValue ev = expected_vertices_walk(d + 1, d);
      const TheoryValue cp = convex_position_probability(d);
      ok = *ev.exact + (1 - *cp.exact) == BigRat(d + 2);
    }
    res.checks.push_back({"vertex_accounting",
                          ok,
                          "E[vertices of S_0..S_{d+1}] + P(not convex) == d+2 for d <= " +
                              std::to_string(accounting_max)});
  }
  {
    bool ok = true;
    for (int d = 1; d <= accounting_max && ok; ++d) {
      const TheoryValue ev = expected_vertices_walk(d + 1, d);
      const TheoryValue bv = bridge_vertex_probability(d);
      ok = BigRat(d + 2) * *bv.exact == *ev.exact;
    }
    res.checks.push_back({"bridge_vertex_consistency",
                          ok,
                          "(d+2) P(point is vertex) == E[vertices] for d <= " +
                              std::to_string(accounting_max)});
  }

  res.all_ok = true;
  for (const auto& c : res.checks) res.all_ok = res.all_ok && c.ok;
  res.wall_ms = elapsed_ms(start);
  return res;
}

}  // namespace sylvester
