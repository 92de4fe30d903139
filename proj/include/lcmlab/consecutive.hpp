#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lcmlab/arith.hpp"

namespace lcmlab {

/// lcm(n, n+1, ..., n+k).
Integer consecutive_lcm(long n, long k);

/// n C(n+k, k); always divides lcm(n..n+k).
Integer consecutive_divisor(long n, long k);
/// n C(n+k, k) when n(n+k) = 0 mod k!, in which case it equals the lcm.
std::optional<Integer> consecutive_divisor_equality(long n, long k);

/// lcm of the k-th row of Pascal's triangle.
Integer lcm_binomials(long k);

/// n C(n+k, k) lcm{C(k, j)}; always a multiple of lcm(n..n+k).
Integer consecutive_multiple(long n, long k);
/// The multiple above when n + k + 1 = 0 mod k!, in which case it equals the lcm.
std::optional<Integer> consecutive_multiple_equality(long n, long k);

/// g_k(n) = n(n+1)...(n+k) / lcm(n..n+k), straight from the definition.
Integer gk_direct(long n, long k);
/// gcd(k!, (n+k) g_{k-1}(n)).
Integer gk_recurrence(long n, long k, const Integer& previous);
/// gcd over j = 0..k of (n+k)(n+k-1)...(n+k-j+1) * (k-j)!.
Integer gk_closed_form(long n, long k);

inline constexpr long kDefaultGkCap = 8;
/// Hard ceiling so k! and all intermediates fit in 64-bit words.
inline constexpr long kMaxGkCap = 20;

/// g_k(1..k!) and the smallest period of the map n -> g_k(n).
struct GkTable {
  long k = 0;
  std::vector<std::uint64_t> values;  // values[i] = g_k(i + 1)
  std::uint64_t smallest_period = 1;

  std::uint64_t at(std::uint64_t n) const { return values[(n - 1) % values.size()]; }
  /// CSV with header `n,g_k` and a trailing `# k=<k> smallest_period=<d>` line.
  void write_csv(std::ostream& os) const;
};

struct GkTableOptions {
  long cap = kDefaultGkCap;
  unsigned jobs = 1;
};

/// Builds g_0, g_1, ..., g_k by the recurrence, each table extended
/// periodically from the previous one. Throws KTooLarge when k > cap.
GkTable gk_table(long k, const GkTableOptions& options = {});

/// Least divisor d of values.size() such that values is d-periodic with wraparound.
std::uint64_t smallest_period(const std::vector<std::uint64_t>& values, unsigned jobs = 1);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace lcmlab
