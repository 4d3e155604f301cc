#pragma once

#include "sylvester/rng.hpp"

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sylvester {

// Samples are processed in fixed-size chunks; chunk k always draws from
// stream k of the run's seed. Results are accumulated per chunk and folded
// in chunk order, so the totals are bit-identical for any worker count,
// any schedule, and for the serial reference path.
inline constexpr uint64_t kChunkSamples = 4096;

struct ChunkTally {
  uint64_t convex = 0;
  uint64_t nonconvex = 0;
  uint64_t degenerate = 0;
  // Accumulators for integer-valued per-sample statistics (hull vertex
  // counts); unused by the pure classification kernels.
  uint64_t value_sum = 0;
  uint64_t value_sumsq = 0;

  ChunkTally& operator+=(const ChunkTally& o) {
    convex += o.convex;
    nonconvex += o.nonconvex;
    degenerate += o.degenerate;
    value_sum += o.value_sum;
    value_sumsq += o.value_sumsq;
    return *this;
  }
};

// fn(rng, count, tally) must classify `count` samples drawn from `rng`.
template <typename Fn>
ChunkTally accumulate_chunks_serial(uint64_t samples, uint64_t seed, Fn&& fn) {
  ChunkTally total;
  const uint64_t nchunks = (samples + kChunkSamples - 1) / kChunkSamples;
  for (uint64_t k = 0; k < nchunks; ++k) {
    const uint64_t count = (k + 1 < nchunks) ? kChunkSamples : samples - k * kChunkSamples;
    RngStream rng(seed, k);
    ChunkTally t;
    fn(rng, count, t);
    total += t;
  }
  return total;
}

template <typename Fn>
ChunkTally accumulate_chunks_parallel(uint64_t samples, uint64_t seed, int workers, Fn&& fn) {
  const uint64_t nchunks = (samples + kChunkSamples - 1) / kChunkSamples;
  std::vector<ChunkTally> slots(nchunks);
#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int64_t k = 0; k < static_cast<int64_t>(nchunks); ++k) {
    const uint64_t uk = static_cast<uint64_t>(k);
    const uint64_t count =
        (uk + 1 < nchunks) ? kChunkSamples : samples - uk * kChunkSamples;
    RngStream rng(seed, uk);
    fn(rng, count, slots[uk]);
  }
#else
  (void)workers;
  for (uint64_t k = 0; k < nchunks; ++k) {
    const uint64_t count = (k + 1 < nchunks) ? kChunkSamples : samples - k * kChunkSamples;
    RngStream rng(seed, k);
    fn(rng, count, slots[k]);
  }
#endif
  ChunkTally total;
  for (const auto& t : slots) total += t;  // fixed fold order
  return total;
}

// workers == 1 takes the serial reference path; anything else goes through
// the OpenMP fan-out (workers == 0 meaning the hardware default).
template <typename Fn>
ChunkTally accumulate_chunks(uint64_t samples, uint64_t seed, int workers, Fn&& fn) {
  if (workers == 1) return accumulate_chunks_serial(samples, seed, fn);
  return accumulate_chunks_parallel(samples, seed, workers, fn);
}

}  // namespace sylvester
