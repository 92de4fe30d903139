#include "lcmlab/bounds.hpp"

#include <cmath>
#include <numbers>

#include "lcmlab/error.hpp"

namespace lcmlab {

std::string_view to_string(BoundName name) noexcept {
  switch (name) {
    case BoundName::T2_divisor: return "T2_divisor";
    case BoundName::T3_equality: return "T3_equality";
    case BoundName::T4_1: return "T4_1";
    case BoundName::T4_1_multiple: return "T4_1_multiple";
    case BoundName::T4_2: return "T4_2";
    case BoundName::T4_3: return "T4_3";
    case BoundName::T4_4: return "T4_4";
    case BoundName::Conjecture1: return "Conjecture1";
    case BoundName::T7_divisor: return "T7_divisor";
    case BoundName::C1_bound: return "C1_bound";
    case BoundName::N2plus1: return "N2plus1";
    case BoundName::T8_divisor: return "T8_divisor";
    case BoundName::T8_equality: return "T8_equality";
    case BoundName::T9_multiple: return "T9_multiple";
    case BoundName::T9_equality: return "T9_equality";
  }
  return "unknown";
}

bool meets_real_bound(const Integer& lcm, const RealBound& bound) {
  return Rational(lcm) >= Rational::from_long_double(bound.guarded);
}

namespace {

void require_increasing(const ArithmeticProgression& s) {
  if (s.r < 1) {
    throw Error(ErrorKind::HypothesisViolated, "progression must be strictly increasing, r = " + s.r.get_str());
  }
}

void require_nonnegative(long n) {
  if (n < 0) throw Error(ErrorKind::BadRange, "n = " + std::to_string(n));
}

Integer product_of(const SequenceWindow& w) { return w.product(); }

std::vector<std::pair<std::string, std::string>> ap_params(const ArithmeticProgression& s, long n) {
  return {{"u0", s.u0.get_str()}, {"r", s.r.get_str()}, {"n", std::to_string(n)}};
}

BoundReport exact_lower_bound(BoundName name, const Integer& lcm, Rational value,
                              std::vector<std::pair<std::string, std::string>> params) {
  BoundReport report;
  report.name = name;
  report.exact_lcm = lcm;
  report.holds = Rational(lcm) >= value;
  report.value = std::move(value);
  report.parameters = std::move(params);
  return report;
}

}  // namespace

Rational ap_lcm_divisor(const ArithmeticProgression& s, long n) {
  require_increasing(s);
  require_nonnegative(n);
  const auto w = window(s, 0, n);
  Integer g = gcd(s.u0, s.term(1));
  Integer gn;
  mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(product_of(w), factorial(n) * gn);
}

std::optional<Integer> ap_lcm_equality(const ArithmeticProgression& s, long n) {
  require_increasing(s);
  if (n < 1) throw Error(ErrorKind::BadRange, "n must be >= 1, got " + std::to_string(n));
  if (gcd(s.u0, s.term(1)) != 1) {
    throw Error(ErrorKind::HypothesisViolated, "u0 and u1 must be coprime");
  }
  const auto w = window(s, 0, n);
  const Integer nf = factorial(n);
  if (!divides(nf, s.u0 * s.term(n))) return std::nullopt;
  Integer value = abs(product_of(w));
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), nf.get_mpz_t());
  return value;
}

long double ap_pi_bound_nominal(const Integer& u0, const Integer& r, long n) {
  const long double rr = to_long_double(r);
  const long double exponent = static_cast<long double>(n - 1) + Rational(u0, r).to_long_double();
  return std::sqrt(rr) * std::pow(rr + 1.0L, exponent) / std::numbers::pi_v<long double>;
}

std::vector<BoundReport> ap_lower_bounds(const ArithmeticProgression& s, long n) {
  s.require_positive_coprime();
  require_nonnegative(n);
  const Integer lcm = lcm_window(window(s, 0, n));
  const Rational r1 = Rational(s.r + 1);
  const auto params = ap_params(s, n);

  std::vector<BoundReport> out;
  out.push_back(exact_lower_bound(BoundName::T4_1, lcm, Rational(s.u0) * r1.pow(n - 1), params));
  if (divides(s.r + 1, Integer(n))) {
    out.push_back(exact_lower_bound(BoundName::T4_1_multiple, lcm, Rational(s.u0) * r1.pow(n), params));
  }
  out.push_back(exact_lower_bound(BoundName::T4_2, lcm, Rational(s.r) * r1.pow(n - 1), params));

  Rational part3;
  std::string part3_note;
  if (n >= 1) {
    const Rational rm1 = Rational(s.r - 1);
    if (rm1.is_zero() && n == 1) part3_note = "0^0 taken as 1";
    part3 = Rational(n, n + 1) * Rational(s.r) * (r1.pow(n - 1) + rm1.pow(n - 1));
  }
  out.push_back(exact_lower_bound(BoundName::T4_3, lcm, part3, params));
  out.back().note = part3_note;

  // n >= u0 - (3r + 1)/2, kept in integers.
  if (2 * Integer(n) >= 2 * s.u0 - 3 * s.r - 1) {
    BoundReport report;
    report.name = BoundName::T4_4;
    report.exact_lcm = lcm;
    const auto real = RealBound::from_nominal(ap_pi_bound_nominal(s.u0, s.r, n));
    report.holds = meets_real_bound(lcm, real);
    report.value = real;
    report.parameters = params;
    if (n == 0) report.note = "n = 0 follows from monotonicity of sqrt(x)(x+1)^(u0/x - 1)";
    out.push_back(std::move(report));
  }
  return out;
}

Rational ap_strong_lower_bound(const ArithmeticProgression& s, long n) {
  s.require_positive_coprime();
  require_nonnegative(n);
  return Rational(s.u0) * Rational(s.r + 1).pow(n);
}

Rational tail_quotient(const ArithmeticProgression& s, long n, long k) {
  if (k < 0 || k > n) {
    throw Error(ErrorKind::BadRange, "need 0 <= k <= n, got k = " + std::to_string(k) + ", n = " + std::to_string(n));
  }
  Integer p = 1;
  for (long i = k; i <= n; ++i) p *= s.term(i);
  return Rational(p, factorial(n - k));
}

long tail_quotient_argmax(const ArithmeticProgression& s, long n) {
  s.require_positive_coprime();
  require_nonnegative(n);
  Integer q;
  const Integer num = Integer(n) - s.u0;
  const Integer den = s.r + 1;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  q += 1;
  return q > 0 ? q.get_si() : 0;
}

Rational quadratic_lcm_divisor(const QuadraticSequence& s, long m, long n) {
  if (m < 0 || m >= n) {
    throw Error(ErrorKind::BadRange, "need 0 <= m < n, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
  }
  const auto w = window(s, m, n);
  const long t = s.t().get_si();
  if (t == 0 && m == 0) return Rational(2 * w.product(), factorial(2 * n));
  return Rational(factorial(2 * m + t - 1) * w.product(), factorial(2 * n + t));
}

Rational quadratic_lower_bound(const QuadraticSequence& s, long n) {
  if (n < 1) throw Error(ErrorKind::BadRange, "n must be >= 1, got " + std::to_string(n));
  (void)window(s, 0, n);
  const Rational growth = Rational(s.a(), 4).pow(n);
  if (s.t() == 0) return Rational(2 * s.b()) * growth;
  Integer scale;
  mpz_mul_2exp(scale.get_mpz_t(), s.t().get_mpz_t(), s.t().get_ui());
  return Rational(s.b(), scale) * growth;
}

Integer square_plus_one_lcm(long n) {
  if (n < 1) throw Error(ErrorKind::BadRange, "n must be >= 1, got " + std::to_string(n));
  return lcm_window(window(QuadraticSequence(1, 0, 1), 1, n));
}

SquarePlusOneBound square_plus_one_bound(long n, long r) {
  if (r < 3) throw Error(ErrorKind::BadR, "r must be >= 3, got " + std::to_string(r));
  if (n < r) throw Error(ErrorKind::BadRange, "need n >= r, got n = " + std::to_string(n));
  SquarePlusOneBound out;
  out.blocks = n / r;
  out.exact = Rational(2) * Rational(Integer(r) * r, 4).pow(out.blocks);
  const long double rr = static_cast<long double>(r);
  out.closed_form = 8.0L / (rr * rr) * std::pow(rr / 2.0L, 2.0L * static_cast<long double>(n) / rr);
  return out;
}

Rational square_plus_one_headline(long n) { return Rational(8, 25) * Rational(721, 500).pow(n); }

std::vector<RatioPoint> ratio_scan(const RatioFamily& family, long lo, long hi) {
  if (lo < 1 || lo > hi) {
    throw Error(ErrorKind::EmptyRange, "delta range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (family.kind == RatioFamily::Kind::ConditionCoefficient && (family.a < 1 || family.b < 1)) {
    throw Error(ErrorKind::BadInput, "a and b must be positive");
  }
  std::vector<RatioPoint> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long d = lo; d <= hi; ++d) {
    RatioPoint p{d, 0};
    if (family.kind == RatioFamily::Kind::LeadingConstant) {
      const long double u0 = 3.0L * d + 2.0L;
      const long double r = 2.0L * d + 1.0L;
      p.ratio = u0 / (std::sqrt(r) * std::pow(r + 1.0L, u0 / r - 1.0L));
    } else {
      const Integer u0 = Integer(family.a) * family.b * d + 1;
      const Integer r = Integer(family.b) * family.b * d;
      const long double bound = ap_pi_bound_nominal(u0, r, 1);
      p.ratio = to_long_double(lcm(u0, u0 + r)) / bound;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace lcmlab
