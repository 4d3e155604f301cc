#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace sylvester {

// Philox 4x32 with 10 rounds. Counter-based: the i-th output of a stream is
// a pure function of (seed, stream_id, i), so disjoint streams can be handed
// to parallel workers and replay identically under any schedule. Constants
// and round structure follow the original SC'11 construction; the known-
// answer vectors from its reference test suite are pinned in the unit tests.
namespace philox {

inline constexpr uint32_t kMul0 = 0xD2511F53u;
inline constexpr uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline std::array<uint32_t, 4> rounds10(std::array<uint32_t, 4> ctr,
                                        std::array<uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    const uint64_t p0 = static_cast<uint64_t>(kMul0) * ctr[0];
    const uint64_t p1 = static_cast<uint64_t>(kMul1) * ctr[2];
    const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
    const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

// Block layout used throughout this project: counter = (block, stream_id)
// split into 32-bit words little-end first, key = seed likewise.
inline std::array<uint32_t, 4> block(uint64_t seed, uint64_t stream_id, uint64_t block_index) {
  return rounds10({static_cast<uint32_t>(block_index), static_cast<uint32_t>(block_index >> 32),
                   static_cast<uint32_t>(stream_id), static_cast<uint32_t>(stream_id >> 32)},
                  {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)});
}

}  // namespace philox

// Sequential view of one Philox stream. Each 128-bit block yields two 64-bit
// words; state is just the word index, so construction is free and skipping
// ahead would be too.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream_id)
      : seed_(seed), stream_(stream_id) {}

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }
  uint64_t word_index() const { return index_; }

  uint64_t next_u64() {
    const uint64_t blk = index_ >> 1;
    if (blk != cached_block_) {
      cached_ = philox::block(seed_, stream_, blk);
      cached_block_ = blk;
    }
    const unsigned lane = static_cast<unsigned>(index_ & 1) * 2;
    ++index_;
    return static_cast<uint64_t>(cached_[lane]) | (static_cast<uint64_t>(cached_[lane + 1]) << 32);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe to pass to log().
  double next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform integer in [lo, hi] by 128-bit multiply-high range reduction.
  int64_t next_int(int64_t lo, int64_t hi) {
    const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    const uint64_t v = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * range) >> 64);
    return lo + static_cast<int64_t>(v);
  }

  // Standard normal pair by the Box-Muller transform: exactly two uniforms
  // per pair, no rejection, so the draw count is a fixed function of the
  // request sequence.
  void next_normal_pair(double& z0, double& z1) {
    const double u = next_unit_open();
    const double v = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 6.283185307179586476925286766559 * v;
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
  }

  // Buffered single draws on top of next_normal_pair.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double z0, z1;
    next_normal_pair(z0, z1);
    spare_ = z1;
    have_spare_ = true;
    return z0;
  }

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t index_ = 0;
  uint64_t cached_block_ = ~0ull;
  std::array<uint32_t, 4> cached_{};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sylvester
