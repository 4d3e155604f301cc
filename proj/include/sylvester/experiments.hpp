#pragma once

#include "sylvester/formulas.hpp"
#include "sylvester/mc_engine.hpp"
#include "sylvester/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sylvester {

enum class ExperimentMode { WalkConvexity, BridgeConvexity, VertexCount, PermutationOracle, Baseline };

const char* mode_name(ExperimentMode mode);

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::WalkConvexity;
  int d = 2;
  // Walk length for VertexCount (the experiment looks at S_0..S_n).
  int n = 0;
  IncrementLaw law = IncrementLaw::StdGaussian;
  double law_param = 1.0;
  // WalkConvexity/BridgeConvexity/VertexCount/Baseline: Monte Carlo sample
  // count. PermutationOracle: number of accepted input sets.
  uint64_t samples = 1'000'000;
  uint64_t seed = 0;
  // 0 = hardware default; 1 = serial reference path; k > 1 = k OpenMP
  // workers. The estimate is identical in all cases.
  int workers = 0;
  long long coord_bound = 10;       // PermutationOracle
  std::string baseline_target;      // Baseline: key into classical_constants()

  IncrementSpec increment_spec() const { return IncrementSpec{law, d, law_param}; }
  // Throws std::invalid_argument on out-of-domain values.
  void validate() const;
};

// Exhaustive check of one integer input set: every permutation of the d+2
// zero-sum increment vectors classified exactly.
struct OracleCertificate {
  int d = 0;
  long long coord_bound = 0;
  uint64_t seed = 0;
  uint64_t stream = 0;
  // The accepted zero-sum increment vectors (d+2 of them).
  std::vector<std::vector<long long>> increments;
  // How many candidate sets were rejected for producing a degenerate
  // permutation before this one was accepted.
  uint64_t rejected_sets = 0;
  BigInt convex_count = 0;
  BigInt total = 0;  // (d+2)!
  BigRat probability;  // convex_count / total
  bool matches_theory = false;  // probability == 1 - 2/(d+1)! exactly
};

struct ExperimentReport {
  ExperimentConfig config;
  double estimate = 0.0;
  TheoryValue theory;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double z = 0.0;
  // Self-declared acceptance band: |estimate - theory| must stay below it
  // for exit code 0; it is four standard errors at the configured sample
  // size (zero-width for the exact oracle).
  double tolerance_band = 0.0;
  bool tolerance_ok = false;
  uint64_t trials_total = 0;
  uint64_t trials_classified = 0;
  uint64_t trials_degenerate = 0;
  std::vector<OracleCertificate> certificates;  // PermutationOracle only
  std::string rng_fingerprint;
  double wall_ms = 0.0;
};

ExperimentReport run_walk_experiment(const ExperimentConfig& config);
ExperimentReport run_bridge_experiment(const ExperimentConfig& config);
ExperimentReport run_vertex_count_experiment(const ExperimentConfig& config);
ExperimentReport run_baseline_experiment(const ExperimentConfig& config);
ExperimentReport run_oracle_experiment(const ExperimentConfig& config);
// Dispatch on config.mode.
ExperimentReport run_experiment(const ExperimentConfig& config);

// One accepted input set, enumerated exhaustively. Draws integer sets from
// (seed, stream) until one is nondegenerate under every permutation, then
// counts convex arrangements exactly. Throws std::invalid_argument unless
// 1 <= d <= 6 and coord_bound >= 1; throws std::runtime_error if 10000
// candidate sets in a row are rejected.
OracleCertificate run_permutation_oracle(int d, long long coord_bound, uint64_t seed,
                                         uint64_t stream = 0);

// Exact identity checks shared by the CLI and the acceptance suite. Each
// check evaluates a closed-form identity over exact arithmetic.
struct IdentityCheck {
  std::string name;
  bool ok;
  std::string detail;
};

struct IdentitySuiteResult {
  std::vector<IdentityCheck> checks;
  bool all_ok = true;
  double wall_ms = 0.0;
};

// Runs: Stirling row sums (n <= row_sum_max), the half-row identity
// (n <= half_row_max), the rising-factorial generating identity
// (n <= generating_max, integer t in [-3, 3]), cycle-count enumeration
// cross-check (n <= 8), the vertex-count accounting identity and the
// bridge-vertex consistency identity (d <= accounting_max).
IdentitySuiteResult run_identity_suite(int row_sum_max = 200, int half_row_max = 200,
                                       int generating_max = 60, int accounting_max = 30);

}  // namespace sylvester
