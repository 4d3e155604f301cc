#pragma once

#include "sylvester/bigint.hpp"

#include <vector>

namespace sylvester {

// Triangular table of signless Stirling numbers of the first kind.
// entry(n, m) counts permutations of n elements with exactly m cycles and
// satisfies entry(n, m) = entry(n-1, m-1) + (n-1) * entry(n-1, m).
class StirlingTable {
 public:
  // Builds rows 0..n_max eagerly.
  explicit StirlingTable(int n_max);

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }

  // Appends rows up to new_n_max; no-op if the table already covers it.
  // Single-writer: concurrent extend() calls must be serialized by the
  // caller. stirling_first() below does that for its shared table.
  void extend(int new_n_max);

  // Total on n in [0, n_max]: out-of-triangle arguments (m < 0, m > n, or
  // m == 0 < n) give 0. entry(0, 0) == 1.
  const BigInt& entry(int n, int m) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  static const BigInt zero_;
};

// Signless Stirling number of the first kind via a shared memoized table.
// Thread-safe; throws std::invalid_argument if n < 0.
BigInt stirling_first(int n, int m);

// entry(n, top) + entry(n, top-2) + entry(n, top-4) + ... down to index 0,
// keeping the parity of `top` (terms above n vanish). This is the sum that
// turns Stirling rows into vertex-count and convexity formulas.
// Throws std::invalid_argument if n < 0.
BigInt alternating_tail_sum(int n, int top);

// Rising factorial t (t+1) ... (t+n-1) over the rationals; empty product
// for n == 0. Equals sum_m entry(n, m) t^m, which the tests exploit.
// Throws std::invalid_argument if n < 0.
BigRat rising_factorial(int n, const BigRat& t);

// Checks 2 * (entry(n, n) + entry(n, n-2) + ...) == n! exactly.
// Throws std::invalid_argument if n < 2 (the identity starts at n == 2).
bool half_row_identity_check(int n);

}  // namespace sylvester
