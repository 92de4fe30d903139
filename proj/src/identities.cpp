#include "lcmlab/identities.hpp"

#include <string>

#include "lcmlab/error.hpp"

namespace lcmlab {

Rational reciprocal_sum_gamma(std::span<const Integer> alphas, std::span<const Integer> betas) {
  if (alphas.size() != betas.size()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(alphas.size()) + " alphas vs " + std::to_string(betas.size()) + " betas");
  }
  if (alphas.empty()) throw Error(ErrorKind::LengthMismatch, "empty families");
  Rational sum;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] == 0 || betas[i] == 0) throw Error(ErrorKind::ZeroEntry, "entry " + std::to_string(i) + " is zero");
    sum += Rational(1, alphas[i] * betas[i]);
  }
  if (sum.is_zero()) throw Error(ErrorKind::ZeroSum, "sum of reciprocals vanishes");
  return sum.reciprocal();
}

bool difference_product_multiple_check(const SequenceWindow& w) {
  const auto diffs = difference_products(w);
  const Integer lhs = lcm_window(w) * lcm_list(diffs);
  return divides(w.product(), lhs);
}

namespace {

void check_positive(long n) {
  if (n < 1) throw Error(ErrorKind::NonPositiveN, "n = " + std::to_string(n));
}

Rational weighted_sum(long n, const Rational& x, bool odd_only) {
  Rational sum;
  for (long k = 1; k <= n; ++k) {
    if (odd_only && k % 2 == 0) continue;
    sum += Rational(binomial(n, k) * k) * x.pow(n - k + 1);
  }
  return sum;
}

}  // namespace

bool weighted_binomial_identity_check(long n, const Rational& x) {
  check_positive(n);
  return weighted_sum(n, x, false) == Rational(n) * x * (x + 1).pow(n - 1);
}

bool odd_weighted_binomial_identity_check(long n, const Rational& x) {
  check_positive(n);
  const Rational rhs = Rational(1, 2) * Rational(n) * x * ((x + 1).pow(n - 1) + (x - 1).pow(n - 1));
  return weighted_sum(n, x, true) == rhs;
}

bool central_binomial_estimate_check(long k) {
  if (k < 0) throw Error(ErrorKind::NegativeInput, "k = " + std::to_string(k));
  const Integer c = binomial(2 * k + 1, k);
  Integer rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 16, static_cast<unsigned long>(k));
  rhs *= 4;
  return c * c * (2 * k + 3) < rhs;
}

}  // namespace lcmlab
