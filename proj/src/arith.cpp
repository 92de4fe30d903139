#include "lcmlab/arith.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "lcmlab/error.hpp"

namespace lcmlab {

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Integer lcm(const Integer& x, const Integer& y) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return l;
}

Integer lcm_list(std::span<const Integer> xs) {
  Integer acc = 1;
  for (const auto& x : xs) {
    if (x == 0) throw Error(ErrorKind::ZeroTerm, "lcm of a list containing 0");
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
  }
  return acc;
}

namespace {

class FactorialCache {
 public:
  Integer get(long n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < table_.size()) return table_[static_cast<std::size_t>(n)];
      if (n > cap_) return compute(n);
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(table_.size()) <= n) {
      table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
    }
    return table_[static_cast<std::size_t>(n)];
  }

  void set_cap(long cap) {
    std::unique_lock lock(mutex_);
    cap_ = cap;
  }

  long cap() const {
    std::shared_lock lock(mutex_);
    return cap_;
  }

 private:
  static Integer compute(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
  }

  mutable std::shared_mutex mutex_;
  std::vector<Integer> table_{Integer(1)};
  long cap_ = kDefaultFactorialCacheCap;
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

}  // namespace

Integer factorial(long n) {
  if (n < 0) throw Error(ErrorKind::NegativeInput, "factorial of " + std::to_string(n));
  return factorial_cache().get(n);
}

void set_factorial_cache_cap(long cap) { factorial_cache().set_cap(cap); }

long factorial_cache_cap() { return factorial_cache().cap(); }

Integer binomial(long n, long k) {
  if (n < 0) throw Error(ErrorKind::NegativeInput, "binomial with n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (divides(2, p)) return false;
  for (Integer d = 3; d * d <= p; d += 2) {
    if (divides(d, p)) return false;
  }
  return true;
}

long valuation(const Integer& p, const Integer& x) {
  if (!is_prime(p)) throw Error(ErrorKind::BadPrime, p.get_str() + " is not prime");
  if (x == 0) throw Error(ErrorKind::ZeroInput, "valuation of 0");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

bool is_integer_multiple(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw Error(ErrorKind::ZeroDivisor, "multiple of zero");
  return (x / y).is_integer();
}

bool congruent_pair_divides_both(const Integer& x, const Integer& y, long n) {
  if (n < 1) throw Error(ErrorKind::NonPositiveN, "n = " + std::to_string(n));
  const Integer modulus = n;
  const bool hypotheses = divides(modulus, x - y) && divides(factorial(n), x * y);
  if (!hypotheses) return true;
  return divides(modulus, x) && divides(modulus, y);
}

}  // namespace lcmlab
