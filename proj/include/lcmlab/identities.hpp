#pragma once

#include <span>

#include "lcmlab/sequences.hpp"

namespace lcmlab {

/// gamma with sum_i 1/(alpha_i beta_i) = 1/gamma. lcm(alpha) * lcm(beta) is
/// then an integer multiple of gamma whenever gamma is an integer.
Rational reciprocal_sum_gamma(std::span<const Integer> alphas, std::span<const Integer> betas);

/// lcm(terms) * lcm(|difference products|) is a multiple of the product of the terms.
bool difference_product_multiple_check(const SequenceWindow& w);

/// sum_{k=1..n} k C(n,k) x^(n-k+1) == n x (x+1)^(n-1), evaluated exactly.
bool weighted_binomial_identity_check(long n, const Rational& x);

/// Odd-k part of the sum above == (1/2) n x ((x+1)^(n-1) + (x-1)^(n-1)).
bool odd_weighted_binomial_identity_check(long n, const Rational& x);

/// C(2k+1, k) < sqrt(2) 4^k / sqrt(k + 3/2), checked as the squared integer
/// inequality C(2k+1,k)^2 (2k+3) < 4 * 16^k.
bool central_binomial_estimate_check(long k);

}  // namespace lcmlab
