#include "sylvester/stirling.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sylvester {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const BigRat& q) {
  if (q == 0) return 0.0;
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  bool neg = num < 0;
  if (neg) num = -num;
  // Align num/den to ~64 significant bits, divide, then scale back.
  long shift = 64 - (static_cast<long>(msb(num)) - static_cast<long>(msb(den)));
  BigInt n = num, d = den;
  if (shift > 0)
    n <<= shift;
  else
    d <<= -shift;
  double r = std::ldexp((n / d).convert_to<double>(), static_cast<int>(-shift));
  return neg ? -r : r;
}

std::string to_string(const BigRat& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1)
    os << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

const BigInt StirlingTable::zero_ = 0;

StirlingTable::StirlingTable(int n_max) {
  rows_.push_back({BigInt(1)});  // row 0: single entry for the empty permutation
  extend(n_max);
}

void StirlingTable::extend(int new_n_max) {
  for (int n = static_cast<int>(rows_.size()); n <= new_n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = 0;
    for (int m = 1; m <= n; ++m) {
      BigInt v = (m <= n - 1) ? prev[static_cast<size_t>(m)] * (n - 1) : BigInt(0);
      if (m - 1 <= n - 1) v += prev[static_cast<size_t>(m) - 1];
      row[static_cast<size_t>(m)] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& StirlingTable::entry(int n, int m) const {
  if (n < 0 || n > n_max()) throw std::invalid_argument("StirlingTable::entry: n out of range");
  if (m < 0 || m > n) return zero_;
  if (m == 0 && n > 0) return zero_;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

namespace {
std::mutex shared_table_mutex;
StirlingTable& shared_table() {
  static StirlingTable table(64);
  return table;
}
}  // namespace

BigInt stirling_first(int n, int m) {
  if (n < 0) throw std::invalid_argument("stirling_first: n must be nonnegative");
  if (m < 0 || m > n || (m == 0 && n > 0)) return 0;
  std::scoped_lock lock(shared_table_mutex);
  StirlingTable& t = shared_table();
  if (n > t.n_max()) t.extend(std::max(n, 2 * t.n_max()));
  return t.entry(n, m);
}

BigInt alternating_tail_sum(int n, int top) {
  if (n < 0) throw std::invalid_argument("alternating_tail_sum: n must be nonnegative");
  int m = top;
  while (m > n) m -= 2;  // skip terms that vanish, keep the parity of top
  std::scoped_lock lock(shared_table_mutex);
  StirlingTable& t = shared_table();
  if (n > t.n_max()) t.extend(std::max(n, 2 * t.n_max()));
  BigInt sum = 0;
  for (; m >= 0; m -= 2) sum += t.entry(n, m);
  return sum;
}

BigRat rising_factorial(int n, const BigRat& t) {
  if (n < 0) throw std::invalid_argument("rising_factorial: n must be nonnegative");
  BigRat prod = 1;
  for (int k = 0; k < n; ++k) prod *= t + k;
  return prod;
}

bool half_row_identity_check(int n) {
  if (n < 2) throw std::invalid_argument("half_row_identity_check: requires n >= 2");
  return alternating_tail_sum(n, n) * 2 == factorial(static_cast<unsigned>(n));
}

}  // namespace sylvester
