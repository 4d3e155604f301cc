// Times the Monte Carlo kernels through the serial reference path
// (--workers 1) and the OpenMP chunk fan-out, and checks that both produce
// the same estimate bit for bit. Usage: bench_kernels [samples].

#include "sylvester/experiments.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sylvester;

namespace {

void bench_one(const char* label, ExperimentConfig config) {
  config.workers = 1;
  const ExperimentReport serial = run_experiment(config);
  config.workers = 0;
  const ExperimentReport parallel = run_experiment(config);

  const double rate_s = static_cast<double>(config.samples) / (serial.wall_ms / 1000.0);
  const double rate_p = static_cast<double>(config.samples) / (parallel.wall_ms / 1000.0);
  const bool identical = serial.estimate == parallel.estimate &&
                         serial.trials_degenerate == parallel.trials_degenerate;
  std::printf("%-28s serial %8.1f ms (%9.0f/s)   omp %8.1f ms (%9.0f/s)   speedup %.2fx   %s\n",
              label, serial.wall_ms, rate_s, parallel.wall_ms, rate_p,
              serial.wall_ms / parallel.wall_ms,
              identical ? "estimates identical" : "ESTIMATE MISMATCH");
  if (!identical) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t samples = 200'000;
  if (argc > 1) samples = std::strtoull(argv[1], nullptr, 10);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d, chunk size %llu\n", omp_get_max_threads(),
              static_cast<unsigned long long>(kChunkSamples));
#else
  std::printf("built without OpenMP; both paths run serially\n");
#endif

  ExperimentConfig c;
  c.samples = samples;
  c.seed = 20260822;

  c.mode = ExperimentMode::WalkConvexity;
  c.d = 2;
  c.law = IncrementLaw::StdGaussian;
  bench_one("walk d=2 gaussian", c);
  c.d = 3;
  c.law = IncrementLaw::UniformCube;
  bench_one("walk d=3 cube", c);
  c.d = 4;
  c.law = IncrementLaw::IsotropicCauchy;
  bench_one("walk d=4 cauchy", c);

  c.mode = ExperimentMode::BridgeConvexity;
  c.d = 3;
  c.law = IncrementLaw::UniformSphere;
  bench_one("bridge d=3 sphere", c);

  c.mode = ExperimentMode::VertexCount;
  c.d = 2;
  c.n = 10;
  c.law = IncrementLaw::StdGaussian;
  c.samples = samples / 4;
  bench_one("vertices d=2 n=10", c);

  return 0;
}
