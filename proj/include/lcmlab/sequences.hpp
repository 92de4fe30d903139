#pragma once

#include <concepts>
#include <vector>

#include "lcmlab/arith.hpp"

namespace lcmlab {

/// u_k = u0 + k r. The constructor accepts any integers; the positivity and
/// coprimality hypotheses of the lower-bound results live in
/// require_positive_coprime().
struct ArithmeticProgression {
  Integer u0;
  Integer r;

  Integer term(long k) const;
  bool is_positive_coprime() const;
  /// Throws HypothesisViolated unless u0 >= 1, r >= 1 and gcd(u0, r) = 1.
  void require_positive_coprime() const;
};

/// u_k = a k (k + t) + b with a >= 1, t >= 0 and gcd(a, b) = 1, checked on construction.
class QuadraticSequence {
 public:
  QuadraticSequence(Integer a, Integer t, Integer b);

  const Integer& a() const noexcept { return a_; }
  const Integer& t() const noexcept { return t_; }
  const Integer& b() const noexcept { return b_; }

  Integer term(long k) const;
  /// The sequence v_k = u_{k+m}, itself of the same shape with t' = 2m + t.
  QuadraticSequence shifted(long m) const;

 private:
  Integer a_;
  Integer t_;
  Integer b_;
};

template <typename S>
concept SequenceFamily = requires(const S& s, long k) {
  { s.term(k) } -> std::convertible_to<Integer>;
};

/// Materialized terms u_start..u_end, all nonzero.
struct SequenceWindow {
  std::vector<Integer> terms;
  long start_index = 0;
  long end_index = 0;

  /// Wraps an explicit term list as indices 0..size-1. Throws ZeroTerm / BadRange.
  static SequenceWindow from_terms(std::vector<Integer> terms);

  std::size_t size() const noexcept { return terms.size(); }
  Integer product() const;
};

namespace detail {
void check_window_range(long m, long n);
void check_window_terms(const std::vector<Integer>& terms, long m);
}  // namespace detail

template <SequenceFamily S>
SequenceWindow window(const S& s, long m, long n) {
  detail::check_window_range(m, n);
  SequenceWindow w;
  w.start_index = m;
  w.end_index = n;
  w.terms.reserve(static_cast<std::size_t>(n - m + 1));
  for (long k = m; k <= n; ++k) w.terms.push_back(s.term(k));
  detail::check_window_terms(w.terms, m);
  return w;
}

Integer lcm_window(const SequenceWindow& w);

/// For each j, the product over i != j of (u_i - u_j). Throws RepeatedTerm.
std::vector<Integer> difference_products(const SequenceWindow& w);

}  // namespace lcmlab
