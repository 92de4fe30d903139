#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lcmlab/sequences.hpp"

namespace lcmlab {

enum class BoundName {
  T2_divisor,
  T3_equality,
  T4_1,
  T4_1_multiple,
  T4_2,
  T4_3,
  T4_4,
  Conjecture1,
  T7_divisor,
  C1_bound,
  N2plus1,
  T8_divisor,
  T8_equality,
  T9_multiple,
  T9_equality,
};

std::string_view to_string(BoundName name) noexcept;

/// Relative guard applied to every real-valued lower bound before comparing:
/// the bound is multiplied by (1 - 2^-40) so rounding can never fake a violation.
inline constexpr long double kRealBoundGuard = 1.0L - 0x1p-40L;

/// A bound that involves irrational constants, evaluated in long double.
struct RealBound {
  long double nominal = 0;
  long double guarded = 0;  // nominal * kRealBoundGuard

  static RealBound from_nominal(long double value) { return {value, value * kRealBoundGuard}; }
};

using BoundValue = std::variant<Rational, RealBound>;

/// lcm >= guarded real bound, compared exactly against the dyadic value of the float.
bool meets_real_bound(const Integer& lcm, const RealBound& bound);

struct BoundReport {
  BoundName name{};
  Integer exact_lcm;
  BoundValue value;
  bool holds = false;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string note;
};

// Arithmetic progressions ---------------------------------------------------

/// u_0...u_n / (n! gcd(u_0, u_1)^n); lcm(u_0..u_n) is an integer multiple of it.
/// Requires r >= 1 and no zero term in the window.
Rational ap_lcm_divisor(const ArithmeticProgression& s, long n);

/// When gcd(u_0, u_1) = 1 and u_0 u_n = 0 mod n!, the lcm equals
/// |u_0...u_n| / n!; returns that value, otherwise nothing.
std::optional<Integer> ap_lcm_equality(const ArithmeticProgression& s, long n);

/// The four lower bounds for positive coprime (u0, r), one report per applicable part.
std::vector<BoundReport> ap_lower_bounds(const ArithmeticProgression& s, long n);

/// u0 (r+1)^n, the sharpened lower bound for positive coprime (u0, r).
Rational ap_strong_lower_bound(const ArithmeticProgression& s, long n);

/// v_k = u_k...u_n / (n-k)!, a lower bound for lcm(u_0..u_n) for every k.
Rational tail_quotient(const ArithmeticProgression& s, long n, long k);

/// k_0 = max(0, floor((n - u0)/(r + 1)) + 1), where v_k is largest.
long tail_quotient_argmax(const ArithmeticProgression& s, long n);

/// Real value of sqrt(r) (r+1)^(n - 1 + u0/r) / pi.
long double ap_pi_bound_nominal(const Integer& u0, const Integer& r, long n);

// Quadratic sequences --------------------------------------------------------

/// A_u(t, m, n): 2 u_0...u_n / (2n)! when (t, m) = (0, 0), otherwise
/// (2m + t - 1)! u_m...u_n / (2n + t)!. Requires 0 <= m < n.
Rational quadratic_lcm_divisor(const QuadraticSequence& s, long m, long n);

/// 2b (a/4)^n for t = 0, b/(t 2^t) (a/4)^n for t >= 1. Only nontrivial when a >= 5.
Rational quadratic_lower_bound(const QuadraticSequence& s, long n);

/// lcm{k^2 + 1 : 1 <= k <= n}.
Integer square_plus_one_lcm(long n);

struct SquarePlusOneBound {
  long blocks = 0;               // floor(n / r)
  Rational exact;                // 2 (r^2/4)^blocks
  long double closed_form = 0;   // (8/r^2) ((r/2)^(2/r))^n
};

/// Lower bound for lcm{1^2+1, ..., n^2+1} through the subsequence (r k)^2 + 1.
SquarePlusOneBound square_plus_one_bound(long n, long r);

/// 0.32 * 1.442^n as the exact rational (8/25) (721/500)^n.
Rational square_plus_one_headline(long n);

// Optimality ratio scans ------------------------------------------------------

struct RatioFamily {
  enum class Kind {
    /// u0 = a b d + 1, r = b^2 d; ratio = lcm(u0, u1) / (sqrt(r) (r+1)^(u0/r) / pi).
    ConditionCoefficient,
    /// u0 = 3d + 2, r = 2d + 1; ratio = u0 / (sqrt(r) (r+1)^(u0/r - 1)).
    LeadingConstant,
  };
  Kind kind = Kind::LeadingConstant;
  long a = 0;
  long b = 0;
};

struct RatioPoint {
  long delta = 0;
  long double ratio = 0;
};

/// One point per delta in [lo, hi]. Throws EmptyRange when lo > hi or lo < 1.
std::vector<RatioPoint> ratio_scan(const RatioFamily& family, long lo, long hi);

}  // namespace lcmlab
