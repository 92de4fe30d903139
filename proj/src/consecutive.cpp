#include "lcmlab/consecutive.hpp"

#include <numeric>
#include <ostream>
#include <string>

#include "lcmlab/error.hpp"
#include "lcmlab/parallel.hpp"

namespace lcmlab {

namespace {

void check_nk(long n, long k) {
  if (n < 1 || k < 0) {
    throw Error(ErrorKind::BadInput, "need n >= 1 and k >= 0, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
}

void check_nk_positive(long n, long k) {
  if (n < 1 || k < 1) {
    throw Error(ErrorKind::BadInput, "need n >= 1 and k >= 1, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
}

Integer rising_product(long n, long k) {
  Integer p = 1;
  for (long i = n; i <= n + k; ++i) p *= i;
  return p;
}

}  // namespace

Integer consecutive_lcm(long n, long k) {
  check_nk(n, k);
  Integer acc = 1;
  for (long i = n; i <= n + k; ++i) acc = lcm(acc, Integer(i));
  return acc;
}

Integer consecutive_divisor(long n, long k) {
  check_nk(n, k);
  return Integer(n) * binomial(n + k, k);
}

std::optional<Integer> consecutive_divisor_equality(long n, long k) {
  check_nk(n, k);
  if (!divides(factorial(k), Integer(n) * (n + k))) return std::nullopt;
  return consecutive_divisor(n, k);
}

Integer lcm_binomials(long k) {
  if (k < 0) throw Error(ErrorKind::BadInput, "k = " + std::to_string(k));
  Integer acc = 1;
  for (long j = 0; j <= k; ++j) acc = lcm(acc, binomial(k, j));
  return acc;
}

Integer consecutive_multiple(long n, long k) {
  check_nk(n, k);
  return consecutive_divisor(n, k) * lcm_binomials(k);
}

std::optional<Integer> consecutive_multiple_equality(long n, long k) {
  check_nk(n, k);
  if (!divides(factorial(k), Integer(n + k + 1))) return std::nullopt;
  return consecutive_multiple(n, k);
}

Integer gk_direct(long n, long k) {
  check_nk(n, k);
  Integer q = rising_product(n, k);
  const Integer l = consecutive_lcm(n, k);
  mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), l.get_mpz_t());
  return q;
}

Integer gk_recurrence(long n, long k, const Integer& previous) {
  check_nk_positive(n, k);
  return gcd(factorial(k), Integer(n + k) * previous);
}

Integer gk_closed_form(long n, long k) {
  check_nk_positive(n, k);
  Integer g = factorial(k);
  Integer falling = 1;  // (n+k)(n+k-1)...(n+k-j+1)
  for (long j = 1; j <= k; ++j) {
    falling *= n + k - j + 1;
    g = gcd(g, falling * factorial(k - j));
  }
  return g;
}

void GkTable::write_csv(std::ostream& os) const {
  os << "n,g_k\n";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i + 1) << ',' << values[i] << '\n';
  os << "# k=" << k << " smallest_period=" << smallest_period << '\n';
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

bool has_period(const std::vector<std::uint64_t>& values, std::uint64_t d) {
  const std::size_t size = values.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (values[i] != values[(i + d) % size]) return false;
  }
  return true;
}

}  // namespace

std::uint64_t smallest_period(const std::vector<std::uint64_t>& values, unsigned jobs) {
  if (values.empty()) throw Error(ErrorKind::BadInput, "empty table");
  const auto candidates = divisors(values.size());
  if (jobs <= 1) {
    for (auto d : candidates) {
      if (has_period(values, d)) return d;
    }
    return values.size();
  }
  std::vector<char> is_period(candidates.size(), 0);
  parallel_for(candidates.size(), jobs, [&](std::size_t i) { is_period[i] = has_period(values, candidates[i]); });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (is_period[i]) return candidates[i];
  }
  return values.size();
}

GkTable gk_table(long k, const GkTableOptions& options) {
  const long cap = std::min(options.cap, kMaxGkCap);
  if (k < 0) throw Error(ErrorKind::BadInput, "k = " + std::to_string(k));
  if (k > cap) {
    throw Error(ErrorKind::KTooLarge, "k = " + std::to_string(k) + " exceeds the cap " + std::to_string(cap));
  }
  std::vector<std::uint64_t> table{1};  // g_0 on 1..0! = 1..1
  std::uint64_t modulus = 1;            // current k!
  for (long level = 1; level <= k; ++level) {
    const std::uint64_t previous_size = modulus;
    modulus *= static_cast<std::uint64_t>(level);
    std::vector<std::uint64_t> next(modulus);
    parallel_for(modulus, options.jobs, [&](std::size_t i) {
      const std::uint64_t n = i + 1;
      const std::uint64_t prev = table[i % previous_size];
      const auto shifted = static_cast<unsigned __int128>((n + static_cast<std::uint64_t>(level)) % modulus);
      const auto product = static_cast<std::uint64_t>((shifted * prev) % modulus);
      next[i] = std::gcd(modulus, product);
    });
    table = std::move(next);
  }
  GkTable out;
  out.k = k;
  out.values = std::move(table);
  out.smallest_period = smallest_period(out.values, options.jobs);
  return out;
}

}  // namespace lcmlab
