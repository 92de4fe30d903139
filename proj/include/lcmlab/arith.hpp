#pragma once

#include <cstddef>
#include <span>

#include "lcmlab/rational.hpp"

namespace lcmlab {

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& x, const Integer& y);
/// Non-negative lcm taken over absolute values; lcm(x, 0) = 0.
Integer lcm(const Integer& x, const Integer& y);
/// Fold of lcm over the absolute values. Throws ZeroTerm on any zero element.
Integer lcm_list(std::span<const Integer> xs);

/// Default number of memoized factorials.
inline constexpr long kDefaultFactorialCacheCap = 10'000;

/// Exact n!. Values up to the cache cap are memoized process-wide.
Integer factorial(long n);
/// Changes the memoization cap; already cached entries beyond it are kept.
void set_factorial_cache_cap(long cap);
long factorial_cache_cap();

/// Exact C(n, k); 0 when k < 0 or k > n.
Integer binomial(long n, long k);

bool is_prime(const Integer& p);

/// Exponent of the prime p in x.
long valuation(const Integer& p, const Integer& x);

/// True iff x / y is an integer.
bool is_integer_multiple(const Rational& x, const Rational& y);

/// Checks one triple: if n | (x - y) and n! | x*y
/// then n | x and n | y. Vacuously true when the hypotheses fail.
bool congruent_pair_divides_both(const Integer& x, const Integer& y, long n);

inline bool divides(const Integer& d, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; }

}  // namespace lcmlab
