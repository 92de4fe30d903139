// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "lcmlab/arith.hpp"
#include "lcmlab/bounds.hpp"
#include "lcmlab/consecutive.hpp"
#include "lcmlab/harness.hpp"
#include "oracle.hpp"

using namespace lcmlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

mpq_class to_mpq(const Rational& x) {
  mpq_class q(x.num(), x.den());
  q.canonicalize();
  return q;
}

bool is_multiple(const mpz_class& lcm, const Rational& divisor) {
  mpq_class q = mpq_class(lcm) / to_mpq(divisor);
  q.canonicalize();
  return q.get_den() == 1;
}

std::vector<mpz_class> ap_terms(long u0, long r, long n) {
  std::vector<mpz_class> out;
  for (long k = 0; k <= n; ++k) out.emplace_back(u0 + k * r);
  return out;
}

mpz_class range_lcm(long n, long k) {
  std::vector<std::int64_t> terms;
  for (long i = 0; i <= k; ++i) terms.push_back(n + i);
  return oracle::lcm(terms);
}

std::string params(const char* fmt, auto... args) {
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, fmt, args...);
  return buffer;
}

Outcome progression_divisor() {
  Outcome o;
  int cases = 0;
  for (long u0 = 1; u0 <= 15; ++u0) {
    for (long r = 1; r <= 15; ++r) {
      for (long n = 0; n <= 10; ++n, ++cases) {
        const mpz_class lcm = oracle::lcm(ap_terms(u0, r, n));
        if (!is_multiple(lcm, ap_lcm_divisor({u0, r}, n))) o.fail(params("u0=%ld r=%ld n=%ld", u0, r, n));
      }
    }
  }
  if (cases != 15 * 15 * 11) o.fail("case count " + std::to_string(cases));
  if (o.pass) o.detail = std::to_string(cases) + " cases, 0 violations";
  return o;
}

Outcome equality_cases() {
  Outcome o;
  int progression = 0, consecutive = 0;
  for (long u0 = 1; u0 <= 15; ++u0) {
    for (long r = 1; r <= 15; ++r) {
      if (std::gcd(u0, r) != 1) continue;
      for (long n = 1; n <= 10; ++n) {
        const bool congruence = (u0 * (u0 + n * r)) % oracle::factorial(n).get_si() == 0;
        const auto value = ap_lcm_equality({u0, r}, n);
        if (value.has_value() != congruence) o.fail(params("progression u0=%ld r=%ld n=%ld", u0, r, n));
        if (!congruence) continue;
        ++progression;
        mpz_class prod = 1;
        for (const auto& x : ap_terms(u0, r, n)) prod *= x;
        const mpz_class expected = prod / oracle::factorial(n);
        if (oracle::lcm(ap_terms(u0, r, n)) != expected || !value || *value != expected) {
          o.fail(params("progression u0=%ld r=%ld n=%ld", u0, r, n));
        }
      }
    }
  }
  for (long n = 1; n <= 200; ++n) {
    for (long k = 0; k <= 8; ++k) {
      const bool congruence = (n * (n + k)) % oracle::factorial(k).get_si() == 0;
      const auto value = consecutive_divisor_equality(n, k);
      if (value.has_value() != congruence) o.fail(params("consecutive n=%ld k=%ld", n, k));
      if (!congruence) continue;
      ++consecutive;
      const mpz_class expected = n * oracle::binomial(n + k, k);
      if (range_lcm(n, k) != expected || !value || *value != expected) o.fail(params("consecutive n=%ld k=%ld", n, k));
    }
  }
  if (o.pass) o.detail = std::to_string(progression) + " progression and " + std::to_string(consecutive) + " consecutive equalities";
  return o;
}

Outcome progression_lower_bounds() {
  Outcome o;
  int checked = 0;
  for (long u0 = 1; u0 <= 12; ++u0) {
    for (long r = 1; r <= 12; ++r) {
      if (std::gcd(u0, r) != 1) continue;
      for (long n = 0; n <= 12; ++n) {
        const mpz_class lcm = oracle::lcm(ap_terms(u0, r, n));
        for (const auto& report : ap_lower_bounds({u0, r}, n)) {
          ++checked;
          bool holds = false;
          if (const auto* q = std::get_if<Rational>(&report.value)) {
            holds = mpq_class(lcm) >= to_mpq(*q);
          } else {
            const auto& real = std::get<RealBound>(report.value);
            holds = mpq_class(lcm) >= to_mpq(Rational::from_long_double(real.nominal * kRealBoundGuard));
          }
          if (!holds || !report.holds || report.exact_lcm != lcm) {
            o.fail(params("%s u0=%ld r=%ld n=%ld", std::string(to_string(report.name)).c_str(), u0, r, n));
          }
        }
        ++checked;
        if (mpq_class(lcm) < u0 * oracle::power(mpq_class(r + 1), n)) o.fail(params("strong u0=%ld r=%ld n=%ld", u0, r, n));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " bounds, 0 violations";
  return o;
}

Outcome tail_quotient_maximizer() {
  Outcome o;
  int cases = 0;
  for (long u0 = 1; u0 <= 12; ++u0) {
    for (long r = 1; r <= 12; ++r) {
      if (std::gcd(u0, r) != 1) continue;
      for (long n = 0; n <= 30; ++n, ++cases) {
        mpq_class best = 0;
        for (long k = 0; k <= n; ++k) best = std::max(best, to_mpq(tail_quotient({u0, r}, n, k)));
        const long diff = n - u0;
        const long k0 = std::max(0L, (diff >= 0 ? diff / (r + 1) : -((-diff + r) / (r + 1))) + 1);
        if (tail_quotient_argmax({u0, r}, n) != k0 || to_mpq(tail_quotient({u0, r}, n, k0)) != best) {
          o.fail(params("u0=%ld r=%ld n=%ld", u0, r, n));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome quadratic_bounds() {
  Outcome o;
  int divisors = 0, lower = 0;
  for (long a = 1; a <= 6; ++a) {
    for (long t = 0; t <= 4; ++t) {
      for (long b = -10; b <= 10; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const QuadraticSequence s(a, t, b);
        for (long n = 1; n <= 8; ++n) {
          for (long m = 0; m < n; ++m) {
            std::vector<mpz_class> terms;
            for (long k = m; k <= n; ++k) terms.emplace_back(a * k * (k + t) + b);
            if (std::find(terms.begin(), terms.end(), 0) != terms.end()) continue;
            ++divisors;
            if (!is_multiple(oracle::lcm(terms), quadratic_lcm_divisor(s, m, n))) {
              o.fail(params("divisor a=%ld t=%ld b=%ld m=%ld n=%ld", a, t, b, m, n));
            }
          }
        }
      }
    }
  }
  for (long t = 0; t <= 1; ++t) {
    for (long b = 1; b <= 10; ++b) {
      if (b % 5 == 0) continue;
      const QuadraticSequence s(5, t, b);
      for (long n = 1; n <= 8; ++n) {
        ++lower;
        std::vector<mpz_class> terms;
        for (long k = 0; k <= n; ++k) terms.emplace_back(5 * k * (k + t) + b);
        if (mpq_class(oracle::lcm(terms)) < to_mpq(quadratic_lower_bound(s, n))) {
          o.fail(params("lower a=5 t=%ld b=%ld n=%ld", t, b, n));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(divisors) + " divisor windows, " + std::to_string(lower) + " lower bounds";
  return o;
}

Outcome square_plus_one_headline_check() {
  Outcome o;
  std::vector<std::int64_t> terms;
  for (long n = 1; n <= 60; ++n) {
    terms.push_back(n * n + 1);
    const mpz_class lcm = oracle::lcm(terms);
    const mpq_class exact_rhs = mpq_class(8, 25) * oracle::power(mpq_class(721, 500), n);
    if (to_mpq(square_plus_one_headline(n)) != exact_rhs) o.fail(params("headline value n=%ld", n));
    if (mpq_class(lcm) < exact_rhs) o.fail(params("n=%ld", n));
    const long double rounded = 0.32L * std::pow(1.442L, static_cast<long double>(n)) * kRealBoundGuard;
    if (mpq_class(lcm) < to_mpq(Rational::from_long_double(rounded))) o.fail(params("rounded n=%ld", n));
  }
  if (o.pass) o.detail = "n = 1..60";
  return o;
}

Outcome consecutive_sandwich() {
  Outcome o;
  int equalities = 0;
  for (long n = 1; n <= 200; ++n) {
    for (long k = 0; k <= 8; ++k) {
      const mpz_class lcm = range_lcm(n, k);
      const mpz_class divisor = n * oracle::binomial(n + k, k);
      const mpz_class multiple = divisor * oracle::lcm(oracle::pascal_row(k));
      if (consecutive_multiple(n, k) != multiple || multiple % lcm != 0 || lcm % divisor != 0) {
        o.fail(params("n=%ld k=%ld", n, k));
      }
      const bool congruence = (n + k + 1) % oracle::factorial(k).get_si() == 0;
      const auto eq = consecutive_multiple_equality(n, k);
      if (eq.has_value() != congruence) o.fail(params("equality n=%ld k=%ld", n, k));
      if (congruence) {
        ++equalities;
        if (lcm != multiple || *eq != lcm) o.fail(params("equality n=%ld k=%ld", n, k));
      }
    }
  }
  if (o.pass) o.detail = "1800 cases, " + std::to_string(equalities) + " equalities";
  return o;
}

Outcome gk_consistency() {
  Outcome o;
  for (long k = 1; k <= 8; ++k) {
    for (long n = 1; n <= 500; ++n) {
      const mpz_class expected = oracle::gk(n, k);
      const Integer direct = gk_direct(n, k);
      if (direct != expected || gk_recurrence(n, k, gk_direct(n, k - 1)) != expected ||
          gk_closed_form(n, k) != expected) {
        o.fail(params("n=%ld k=%ld", n, k));
      }
    }
  }
  const auto g2 = gk_table(2);
  const auto g3 = gk_table(3);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    if (g2.at(n) != (n % 2 == 0 ? 2u : 1u)) o.fail("g_2 table");
    if (g3.at(n) != (n % 3 == 0 ? 6u : 2u)) o.fail("g_3 table");
  }
  const std::uint64_t expected_periods[] = {1, 1, 2, 3};
  for (long k = 0; k <= 3; ++k) {
    if (gk_table(k).smallest_period != expected_periods[k]) o.fail(params("period k=%ld", k));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto g8 = gk_table(8);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (g8.values.size() != 40320) o.fail("g_8 size");
  if (seconds >= 60) o.fail(params("g_8 took %.1f s", seconds));
  for (long n = 1; n <= 40320; n += 97) {
    if (g8.at(n) != oracle::gk(n, 8)) o.fail(params("g_8 entry n=%ld", n));
  }
  if (o.pass) o.detail = params("periods 1 1 2 3; g_8 in %.2f s (period %llu)", seconds,
                                static_cast<unsigned long long>(g8.smallest_period));
  return o;
}

Outcome classic_estimates() {
  Outcome o;
  mpz_class lcm = 1;
  for (long n = 1; n <= 300; ++n) {
    lcm = lcm * n / gcd(lcm, mpz_class(n));
    if (n < 7) continue;
    if (lcm < oracle::power(mpz_class(2), n) || lcm > oracle::power(mpz_class(3), n)) o.fail(params("n=%ld", n));
  }
  std::ostringstream sink;
  const auto summary = harness::run_classic(300, sink);
  if (summary.violations != 0) o.fail("library reports violations");
  if (summary.below_threshold != std::vector<std::pair<long, long>>{{1, 4}, {6, 6}}) o.fail("below-threshold regions");
  if (o.pass) o.detail = "n = 7..300; below 2^n only on [1,4] and [6,6]";
  return o;
}

Outcome leading_constant_ratio() {
  Outcome o;
  const long double lo = 1 / std::numbers::pi_v<long double>;
  const auto points = ratio_scan({RatioFamily::Kind::LeadingConstant, 0, 0}, 1, 10'000);
  long double at_thousand = 0;
  for (const auto& p : points) {
    const long double u0 = 3.0L * p.delta + 2, r = 2.0L * p.delta + 1;
    const long double expected = u0 / (std::sqrt(r) * std::pow(r + 1, u0 / r - 1));
    if (std::fabs(p.ratio - expected) > 1e-12L * expected) o.fail(params("value delta=%ld", p.delta));
    if (p.ratio < lo || p.ratio > 1.5L) o.fail(params("range delta=%ld", p.delta));
    if (p.delta >= 1000 && (p.ratio <= 1.49L || std::fabs(p.ratio - 1.5L) > 1e-2L)) o.fail(params("limit delta=%ld", p.delta));
    if (p.delta == 1000) at_thousand = p.ratio;
  }
  if (points.size() != 10'000) o.fail("point count");
  if (o.pass) {
    o.detail = params("ratio(1)=%.4Lf ratio(1000)=%.4Lf ratio(10000)=%.5Lf", points.front().ratio, at_thousand,
                      points.back().ratio);
  }
  return o;
}

int run_command(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome deterministic_output() {
  Outcome o;
  const std::string cli = LCMLAB_CLI_PATH;
  const std::string base = "/tmp/lcmlab_acceptance_jobs";
  const std::string scan = " verify --theorem T2 --u0 1..15 --r 1..15 --n 0..10";
  if (run_command(cli + scan + " --jobs 1 --output " + base + "1.jsonl") != 0) o.fail("jobs 1 exit status");
  if (run_command(cli + scan + " --jobs 8 --output " + base + "8.jsonl") != 0) o.fail("jobs 8 exit status");
  if (run_command("cmp -s " + base + "1.jsonl " + base + "8.jsonl") != 0) o.fail("outputs differ");
  if (o.pass) o.detail = "T2 scan identical for --jobs 1 and --jobs 8";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"progression divisor scan", progression_divisor},
      {"progression and consecutive equality", equality_cases},
      {"progression lower bounds and u0 (r+1)^n", progression_lower_bounds},
      {"tail quotient maximizer", tail_quotient_maximizer},
      {"quadratic divisor and lower bound", quadratic_bounds},
      {"lcm(k^2+1) >= 0.32 * 1.442^n", square_plus_one_headline_check},
      {"consecutive sandwich and equality", consecutive_sandwich},
      {"g_k formulas, tables and periods", gk_consistency},
      {"2^n <= lcm(1..n) <= 3^n", classic_estimates},
      {"leading constant ratio", leading_constant_ratio},
      {"verify output independent of jobs", deterministic_output},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("%s criterion %zu: %s (%s)\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
