#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "lcmlab/arith.hpp"
#include "lcmlab/bounds.hpp"
#include "lcmlab/error.hpp"
#include "oracle.hpp"

using namespace lcmlab;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an lcmlab::Error");
  return ErrorKind::BadInput;
}

mpq_class to_mpq(const Rational& x) {
  mpq_class q(x.num(), x.den());
  q.canonicalize();
  return q;
}

std::vector<mpz_class> ap_terms(long u0, long r, long n) {
  std::vector<mpz_class> out;
  for (long k = 0; k <= n; ++k) out.emplace_back(u0 + k * r);
  return out;
}

const BoundReport* find(const std::vector<BoundReport>& reports, BoundName name) {
  for (const auto& r : reports) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const Rational& exact(const BoundReport& r) { return std::get<Rational>(r.value); }

}  // namespace

TEST_CASE("progression divisor examples") {
  CHECK(ap_lcm_divisor({2, 3}, 2) == Rational(40));
  CHECK(ap_lcm_divisor({1, 1}, 5) == Rational(6));
  CHECK(ap_lcm_divisor({2, 2}, 1) == Rational(4));
  CHECK(kind_of([] { ap_lcm_divisor({-3, 1}, 5); }) == ErrorKind::ZeroTerm);
}

TEST_CASE("progression divisor scan against the oracle") {
  for (long u0 = 1; u0 <= 15; ++u0) {
    for (long r = 1; r <= 15; ++r) {
      for (long n = 0; n <= 10; ++n) {
        const auto terms = ap_terms(u0, r, n);
        mpz_class prod = 1;
        for (const auto& x : terms) prod *= x;
        const mpz_class g = std::gcd(u0, u0 + r);
        mpq_class divisor(prod, oracle::factorial(n) * oracle::power(g, n));
        divisor.canonicalize();
        const ArithmeticProgression s{u0, r};
        REQUIRE(to_mpq(ap_lcm_divisor(s, n)) == divisor);
        mpq_class quotient = mpq_class(oracle::lcm(terms)) / divisor;
        quotient.canonicalize();
        CHECK(quotient.get_den() == 1);
      }
    }
  }
}

TEST_CASE("progression equality examples") {
  CHECK(ap_lcm_equality({2, 3}, 2) == Integer(40));
  CHECK(ap_lcm_equality({1, 1}, 1) == Integer(2));
  CHECK_FALSE(ap_lcm_equality({1, 2}, 3).has_value());
  CHECK(kind_of([] { ap_lcm_equality({2, 2}, 2); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("progression equality fires only when correct") {
  int fired = 0;
  for (long u0 = 1; u0 <= 15; ++u0) {
    for (long r = 1; r <= 15; ++r) {
      if (std::gcd(u0, r) != 1) continue;
      for (long n = 1; n <= 10; ++n) {
        const auto value = ap_lcm_equality({u0, r}, n);
        const bool congruence = (u0 * (u0 + n * r)) % oracle::factorial(n).get_si() == 0;
        REQUIRE(value.has_value() == congruence);
        if (value) {
          ++fired;
          CHECK(*value == oracle::lcm(ap_terms(u0, r, n)));
        }
      }
    }
  }
  CHECK(fired > 100);
}

TEST_CASE("lower bounds for 1, 3, 5, 7") {
  const auto reports = ap_lower_bounds({1, 2}, 3);
  REQUIRE(reports.size() == 5);
  CHECK(exact(*find(reports, BoundName::T4_1)) == Rational(9));
  CHECK(exact(*find(reports, BoundName::T4_1_multiple)) == Rational(27));
  CHECK(exact(*find(reports, BoundName::T4_2)) == Rational(18));
  CHECK(exact(*find(reports, BoundName::T4_3)) == Rational(15));
  const auto& part4 = std::get<RealBound>(find(reports, BoundName::T4_4)->value);
  CHECK(static_cast<double>(part4.nominal) == doctest::Approx(std::sqrt(2.0) * std::pow(3.0, 2.5) / std::numbers::pi));
  for (const auto& r : reports) {
    CHECK(r.holds);
    CHECK(r.exact_lcm == 105);
  }
}

TEST_CASE("lower bound edge cases") {
  const auto small = ap_lower_bounds({1, 1}, 7);
  CHECK(small.front().exact_lcm == 840);
  CHECK(exact(*find(small, BoundName::T4_1)) == Rational(64));

  const auto empty = ap_lower_bounds({5, 2}, 0);
  CHECK(find(empty, BoundName::T4_4) == nullptr);
  CHECK(exact(*find(empty, BoundName::T4_1)) == Rational(5, 3));
  for (const auto& r : empty) CHECK(r.holds);

  const auto zero_power = ap_lower_bounds({1, 1}, 1);
  const auto* part3 = find(zero_power, BoundName::T4_3);
  REQUIRE(part3 != nullptr);
  CHECK(exact(*part3) == Rational(1));
  CHECK_FALSE(part3->note.empty());

  CHECK(kind_of([] { ap_lower_bounds({4, 2}, 3); }) == ErrorKind::HypothesisViolated);
  CHECK(kind_of([] { ap_lower_bounds({0, 1}, 3); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("lower bound scan against direct evaluation") {
  for (long u0 = 1; u0 <= 12; ++u0) {
    for (long r = 1; r <= 12; ++r) {
      if (std::gcd(u0, r) != 1) continue;
      for (long n = 0; n <= 12; ++n) {
        const mpz_class lcm = oracle::lcm(ap_terms(u0, r, n));
        const auto reports = ap_lower_bounds({u0, r}, n);
        const mpq_class R(r + 1);
        const mpq_class part1 = u0 * (n >= 1 ? oracle::power(R, n - 1) : mpq_class(1 / R));
        CHECK(to_mpq(exact(*find(reports, BoundName::T4_1))) == part1);
        CHECK((find(reports, BoundName::T4_1_multiple) != nullptr) == (n % (r + 1) == 0));
        const mpq_class part2 = r * (n >= 1 ? oracle::power(R, n - 1) : mpq_class(1 / R));
        CHECK(to_mpq(exact(*find(reports, BoundName::T4_2))) == part2);
        if (n >= 1) {
          const mpq_class minus = n == 1 ? mpq_class(1) : oracle::power(mpq_class(r - 1), n - 1);
          const mpq_class part3 = mpq_class(n, n + 1) * r * (oracle::power(R, n - 1) + minus);
          CHECK(to_mpq(exact(*find(reports, BoundName::T4_3))) == part3);
        }
        const bool part4_applies = 2 * n >= 2 * u0 - 3 * r - 1;
        const auto* part4 = find(reports, BoundName::T4_4);
        REQUIRE((part4 != nullptr) == part4_applies);
        if (part4) {
          const double nominal =
              std::sqrt(double(r)) * std::pow(double(r + 1), double(n) - 1 + double(u0) / double(r)) / std::numbers::pi;
          CHECK(static_cast<double>(std::get<RealBound>(part4->value).nominal) == doctest::Approx(nominal).epsilon(1e-12));
          CHECK(lcm.get_d() >= nominal * (1 - 1e-9));
        }
        for (const auto& report : reports) {
          CHECK(report.exact_lcm == lcm);
          CHECK_MESSAGE(report.holds, to_string(report.name) << " u0=" << u0 << " r=" << r << " n=" << n);
        }
        const Rational strong = ap_strong_lower_bound({u0, r}, n);
        CHECK(to_mpq(strong) == u0 * oracle::power(R, n));
        CHECK(mpq_class(lcm) >= to_mpq(strong));
      }
    }
  }
}

TEST_CASE("strong lower bound examples") {
  CHECK(ap_strong_lower_bound({1, 2}, 3) == Rational(27));
  CHECK(ap_strong_lower_bound({1, 1}, 0) == Rational(1));
  CHECK(ap_strong_lower_bound({3, 4}, 4) == Rational(1875));
  CHECK(oracle::lcm(ap_terms(3, 4, 4)) == 21945);
}

TEST_CASE("tail quotient examples") {
  CHECK(tail_quotient({3, 2}, 10, 10) == Rational(23));
  CHECK(tail_quotient({1, 1}, 5, 0) == Rational(6));
  CHECK(tail_quotient({3, 2}, 10, 3) == Rational(Integer(9L * 11 * 13 * 15 * 17 * 19 * 21 * 23), Integer(5040)));
  CHECK(tail_quotient_argmax({3, 2}, 10) == 3);
  CHECK(tail_quotient_argmax({20, 1}, 5) == 0);
  CHECK(tail_quotient_argmax({1, 1}, 1) == 1);
  CHECK(kind_of([] { tail_quotient({1, 1}, 3, 4); }) == ErrorKind::BadRange);
}

TEST_CASE("tail quotient maximizer attains the maximum") {
  for (long u0 = 1; u0 <= 12; ++u0) {
    for (long r = 1; r <= 12; ++r) {
      if (std::gcd(u0, r) != 1) continue;
      for (long n = 0; n <= 30; ++n) {
        mpq_class best = 0;
        std::vector<mpq_class> values;
        for (long k = 0; k <= n; ++k) {
          mpz_class prod = 1;
          for (long i = k; i <= n; ++i) prod *= u0 + i * r;
          mpq_class v(prod, oracle::factorial(n - k));
          v.canonicalize();
          values.push_back(v);
          if (v > best) best = v;
        }
        const long k0 = std::max(0L, (n - u0 >= 0 ? (n - u0) / (r + 1) : -1 - (u0 - n - 1) / (r + 1)) + 1);
        REQUIRE(tail_quotient_argmax({u0, r}, n) == k0);
        CHECK(values[k0] == best);
        CHECK(to_mpq(tail_quotient({u0, r}, n, k0)) == best);
      }
    }
  }
}

TEST_CASE("quadratic divisor examples") {
  CHECK(quadratic_lcm_divisor(QuadraticSequence(5, 0, 1), 0, 2) == Rational(21, 2));
  CHECK(quadratic_lcm_divisor(QuadraticSequence(1, 0, 1), 0, 3) == Rational(5, 18));
  CHECK(quadratic_lcm_divisor(QuadraticSequence(2, 1, 1), 1, 2) == Rational(13, 12));
  CHECK(kind_of([] { quadratic_lcm_divisor(QuadraticSequence(1, 0, 1), 2, 2); }) == ErrorKind::BadRange);
}

TEST_CASE("quadratic divisor scan against the oracle") {
  for (long a = 1; a <= 6; ++a) {
    for (long t = 0; t <= 4; ++t) {
      for (long b = -10; b <= 10; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const QuadraticSequence s(a, t, b);
        for (long n = 1; n <= 8; ++n) {
          for (long m = 0; m < n; ++m) {
            std::vector<mpz_class> terms;
            mpz_class prod = 1;
            bool zero = false;
            for (long k = m; k <= n; ++k) {
              terms.emplace_back(a * k * (k + t) + b);
              zero = zero || terms.back() == 0;
              prod *= terms.back();
            }
            if (zero) continue;
            mpq_class divisor = (t == 0 && m == 0) ? mpq_class(2 * prod, oracle::factorial(2 * n))
                                                   : mpq_class(oracle::factorial(2 * m + t - 1) * prod,
                                                               oracle::factorial(2 * n + t));
            divisor.canonicalize();
            REQUIRE(to_mpq(quadratic_lcm_divisor(s, m, n)) == divisor);
            mpq_class quotient = mpq_class(oracle::lcm(terms)) / divisor;
            quotient.canonicalize();
            CHECK_MESSAGE(quotient.get_den() == 1, "a=" << a << " t=" << t << " b=" << b << " m=" << m << " n=" << n);
          }
        }
      }
    }
  }
}

TEST_CASE("quadratic lower bound examples") {
  CHECK(quadratic_lower_bound(QuadraticSequence(5, 0, 1), 2) == Rational(25, 8));
  CHECK(quadratic_lower_bound(QuadraticSequence(5, 1, 2), 1) == Rational(5, 4));
  CHECK(quadratic_lower_bound(QuadraticSequence(4, 0, 1), 3) == Rational(2));
  CHECK(kind_of([] { quadratic_lower_bound(QuadraticSequence(5, 0, 1), 0); }) == ErrorKind::BadRange);
}

TEST_CASE("quadratic lower bound holds for a >= 5 and b >= 1") {
  for (long a = 5; a <= 6; ++a) {
    for (long t = 0; t <= 4; ++t) {
      for (long b = 1; b <= 10; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const QuadraticSequence s(a, t, b);
        for (long n = 1; n <= 8; ++n) {
          std::vector<mpz_class> terms;
          for (long k = 0; k <= n; ++k) terms.emplace_back(a * k * (k + t) + b);
          const mpq_class quarter(a, 4);
          mpq_class bound = t == 0 ? mpq_class(2 * b * oracle::power(quarter, n))
                                         : mpq_class(mpq_class(b, t * (1L << t)) * oracle::power(quarter, n));
          bound.canonicalize();
          REQUIRE(to_mpq(quadratic_lower_bound(s, n)) == bound);
          CHECK(mpq_class(oracle::lcm(terms)) >= bound);
        }
      }
    }
  }
}

TEST_CASE("square plus one") {
  CHECK(square_plus_one_lcm(5) == 2210);
  const auto five = square_plus_one_bound(5, 5);
  CHECK(five.blocks == 1);
  CHECK(five.exact == Rational(25, 2));
  const auto ten = square_plus_one_bound(10, 5);
  CHECK(ten.blocks == 2);
  CHECK(ten.exact == Rational(625, 8));
  CHECK(static_cast<double>(ten.closed_form) == doctest::Approx(12.5));
  CHECK(square_plus_one_bound(5, 3).exact == Rational(9, 2));
  CHECK(square_plus_one_headline(10).to_long_double() == doctest::Approx(0.32 * std::pow(1.442, 10)));
  CHECK(square_plus_one_headline(1) == Rational(Integer(8 * 721), Integer(25 * 500)));
  CHECK(kind_of([] { square_plus_one_bound(10, 2); }) == ErrorKind::BadR);
  CHECK(kind_of([] { square_plus_one_bound(2, 3); }) == ErrorKind::BadRange);
}

TEST_CASE("square plus one bounds hold up to 60") {
  std::vector<std::int64_t> terms;
  for (long n = 1; n <= 60; ++n) {
    terms.push_back(n * n + 1);
    const mpz_class lcm = oracle::lcm(terms);
    REQUIRE(square_plus_one_lcm(n) == lcm);
    CHECK(mpq_class(lcm) >= mpq_class(8, 25) * oracle::power(mpq_class(721, 500), n));
    for (long r = 3; r <= std::min(7L, n); ++r) {
      const auto bound = square_plus_one_bound(n, r);
      mpq_class expected = 2 * oracle::power(mpq_class(r * r, 4), n / r);
      expected.canonicalize();
      REQUIRE(to_mpq(bound.exact) == expected);
      CHECK(mpq_class(lcm) >= expected);
      CHECK(static_cast<double>(bound.closed_form) <= expected.get_d() * (1 + 1e-12));
    }
  }
}

TEST_CASE("the rounded headline constant is below the true base") {
  CHECK(std::pow(2.5L, 0.4L) > 1.442L);
  CHECK(8.0L / 25.0L == doctest::Approx(0.32));
}

TEST_CASE("real bounds compare conservatively") {
  const auto bound = RealBound::from_nominal(105.0L);
  CHECK(bound.guarded < bound.nominal);
  CHECK(meets_real_bound(105, bound));
  CHECK_FALSE(meets_real_bound(104, bound));
  CHECK(meets_real_bound(7, RealBound::from_nominal(7.0L)));
}

TEST_CASE("leading constant ratio") {
  const auto points = ratio_scan({RatioFamily::Kind::LeadingConstant, 0, 0}, 1, 1000);
  REQUIRE(points.size() == 1000);
  CHECK(static_cast<double>(points.front().ratio) == doctest::Approx(5.0 / (std::sqrt(3.0) * std::pow(4.0, 2.0 / 3.0))));
  CHECK(static_cast<double>(points.front().ratio) == doctest::Approx(1.146).epsilon(1e-3));
  CHECK(static_cast<double>(points.back().ratio) == doctest::Approx(1.497).epsilon(1e-3));
  for (const auto& p : points) {
    CHECK(p.ratio >= 1 / std::numbers::pi_v<long double>);
    CHECK(p.ratio <= 1.5L);
  }
  CHECK(kind_of([] { ratio_scan({}, 5, 4); }) == ErrorKind::EmptyRange);
  CHECK(kind_of([] { ratio_scan({}, 0, 4); }) == ErrorKind::EmptyRange);
}

TEST_CASE("condition coefficient ratio") {
  const auto points = ratio_scan({RatioFamily::Kind::ConditionCoefficient, 1, 1}, 1, 50);
  for (const auto& p : points) {
    const double u0 = p.delta + 1, r = p.delta;
    const double lcm = double(oracle::lcm(std::vector<std::int64_t>{p.delta + 1, 2 * p.delta + 1}).get_si());
    const double expected = lcm / (std::sqrt(r) * std::pow(r + 1, u0 / r) / std::numbers::pi);
    CHECK(static_cast<double>(p.ratio) == doctest::Approx(expected).epsilon(1e-10));
  }
}
