#include "lcmlab/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>

#include <json.hpp>

#include "lcmlab/consecutive.hpp"
#include "lcmlab/error.hpp"
#include "lcmlab/identities.hpp"
#include "lcmlab/parallel.hpp"

namespace lcmlab::harness {

using json = nlohmann::ordered_json;

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Violation: return "violation";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

constexpr std::pair<Theorem, std::string_view> kTheoremNames[] = {
    {Theorem::T1, "T1"}, {Theorem::T2, "T2"},   {Theorem::T3, "T3"},   {Theorem::T4, "T4"},
    {Theorem::Conj1, "Conj1"}, {Theorem::T7, "T7"}, {Theorem::C1, "C1"}, {Theorem::T8, "T8"},
    {Theorem::T9, "T9"}, {Theorem::GK, "GK"},   {Theorem::N2P1, "N2P1"}, {Theorem::IDENTITIES, "IDENTITIES"},
};

}  // namespace

std::string_view to_string(Theorem t) noexcept {
  for (const auto& [theorem, name] : kTheoremNames) {
    if (theorem == t) return name;
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view name) {
  for (const auto& [theorem, known] : kTheoremNames) {
    if (known == name) return theorem;
  }
  throw Error(ErrorKind::BadInput, "unknown theorem '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json-lines" || name == "jsonl" || name == "json") return OutputFormat::JsonLines;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::BadInput, "unknown format '" + std::string(name) + "'");
}

namespace {

long parse_long(std::string_view text) {
  long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw Error(ErrorKind::BadInput, "not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

IntRange IntRange::parse(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const long v = parse_long(text);
    return {v, v};
  }
  IntRange r{parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
  if (r.lo > r.hi) throw Error(ErrorKind::EmptyRange, "range '" + std::string(text) + "' is empty");
  return r;
}

std::vector<std::string> scan_parameters(Theorem t) {
  switch (t) {
    case Theorem::T1: return {"seed", "len"};
    case Theorem::T2:
    case Theorem::T3:
    case Theorem::T4:
    case Theorem::Conj1: return {"u0", "r", "n"};
    case Theorem::T7: return {"a", "t", "b", "m", "n"};
    case Theorem::C1: return {"a", "t", "b", "n"};
    case Theorem::T8:
    case Theorem::T9: return {"n", "k"};
    case Theorem::GK: return {"k", "n"};
    case Theorem::N2P1: return {"n"};
    case Theorem::IDENTITIES: return {"n"};
  }
  return {};
}

IntRange default_range(Theorem t, std::string_view p) {
  switch (t) {
    case Theorem::T1:
      if (p == "seed") return {1, 1000};
      if (p == "len") return {1, 12};
      break;
    case Theorem::T2:
    case Theorem::T3:
      if (p == "u0" || p == "r") return {1, 15};
      if (p == "n") return {0, 10};
      break;
    case Theorem::T4:
    case Theorem::Conj1:
      if (p == "u0" || p == "r") return {1, 12};
      if (p == "n") return {0, 12};
      break;
    case Theorem::T7:
      if (p == "a") return {1, 6};
      if (p == "t") return {0, 4};
      if (p == "b") return {-10, 10};
      if (p == "m") return {0, 7};
      if (p == "n") return {1, 8};
      break;
    case Theorem::C1:
      if (p == "a") return {5, 5};
      if (p == "t") return {0, 1};
      if (p == "b") return {1, 10};
      if (p == "n") return {1, 8};
      break;
    case Theorem::T8:
    case Theorem::T9:
      if (p == "n") return {1, 200};
      if (p == "k") return {0, 8};
      break;
    case Theorem::GK:
      if (p == "k") return {1, 8};
      if (p == "n") return {1, 500};
      break;
    case Theorem::N2P1:
      if (p == "n") return {1, 60};
      if (p == "r") return {3, 7};
      break;
    case Theorem::IDENTITIES:
      if (p == "n") return {1, 30};
      break;
  }
  throw Error(ErrorKind::BadInput,
              "theorem " + std::string(to_string(t)) + " has no parameter '" + std::string(p) + "'");
}

IntRange ScanSpec::range(std::string_view parameter) const {
  const auto it = ranges.find(std::string(parameter));
  const IntRange r = it != ranges.end() ? it->second : default_range(theorem, parameter);
  if (r.size() == 0) throw Error(ErrorKind::EmptyRange, "range for '" + std::string(parameter) + "' is empty");
  return r;
}

void ScanSpec::validate() const {
  if (jobs < 1) throw Error(ErrorKind::BadInput, "worker count must be >= 1");
  auto known = scan_parameters(theorem);
  if (theorem == Theorem::N2P1) known.emplace_back("r");
  for (const auto& [name, r] : ranges) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw Error(ErrorKind::BadInput, "theorem " + std::string(to_string(theorem)) + " has no parameter '" + name + "'");
    }
    if (r.size() == 0) throw Error(ErrorKind::EmptyRange, "range for '" + name + "' is empty");
  }
  for (const auto& name : known) (void)range(name);
}

void ScanSummary::add(Verdict v) {
  switch (v) {
    case Verdict::Holds: ++holds; break;
    case Verdict::Equality: ++equality; break;
    case Verdict::Violation: ++violation; break;
    case Verdict::NotApplicable: ++not_applicable; break;
  }
}

std::string format_real(long double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.20Lg", value);
  return buffer;
}

namespace {

Verdict verdict_of(bool ok) { return ok ? Verdict::Holds : Verdict::Violation; }

ScanResult not_applicable(std::string claim, Params params, std::string note) {
  ScanResult r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.verdict = Verdict::NotApplicable;
  r.note = std::move(note);
  return r;
}

std::string value_string(const BoundValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->to_string();
  return format_real(std::get<RealBound>(v).nominal);
}

ScanResult from_report(const BoundReport& report, Params params) {
  ScanResult r;
  r.claim = std::string(to_string(report.name));
  r.params = std::move(params);
  r.exact_lcm = report.exact_lcm.get_str();
  r.claim_value = value_string(report.value);
  r.verdict = verdict_of(report.holds);
  r.note = report.note;
  return r;
}

// Random strictly increasing window of `len` distinct nonzero integers in [-50, 50].
SequenceWindow random_window(long seed, long len) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::vector<long> pool;
  for (long v = -50; v <= 50; ++v) {
    if (v != 0) pool.push_back(v);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<long> chosen(pool.begin(), pool.begin() + len);
  std::sort(chosen.begin(), chosen.end());
  std::vector<Integer> terms(chosen.begin(), chosen.end());
  return SequenceWindow::from_terms(std::move(terms));
}

std::string join_terms(const SequenceWindow& w) {
  std::string s;
  for (const auto& x : w.terms) {
    if (!s.empty()) s += ' ';
    s += x.get_str();
  }
  return s;
}

std::vector<ScanResult> eval_partial_fraction(long seed, long len) {
  Params params{{"seed", seed}, {"len", len}};
  if (len < 1 || len > 100) return {not_applicable("T1_multiple", params, "len must be in 1..100")};
  const auto w = random_window(seed, len);
  const Integer lcm = lcm_window(w);
  const Integer product = w.product();
  const auto diffs = difference_products(w);

  ScanResult multiple;
  multiple.claim = "T1_multiple";
  multiple.params = params;
  multiple.exact_lcm = lcm.get_str();
  multiple.claim_value = product.get_str();
  multiple.verdict = verdict_of(difference_product_multiple_check(w));
  multiple.note = "terms " + join_terms(w);

  ScanResult identity;
  identity.claim = "T1_partial_fraction";
  identity.params = std::move(params);
  identity.exact_lcm = lcm.get_str();
  const Rational gamma = reciprocal_sum_gamma(w.terms, diffs);
  identity.claim_value = gamma.to_string();
  identity.verdict = verdict_of(gamma == Rational(product));
  return {std::move(multiple), std::move(identity)};
}

Params ap_params(long u0, long r, long n) { return {{"u0", u0}, {"r", r}, {"n", n}}; }

std::vector<ScanResult> eval_t2(long u0, long r, long n) {
  const ArithmeticProgression s{u0, r};
  auto params = ap_params(u0, r, n);
  if (r < 1) return {not_applicable("T2_divisor", params, "progression not strictly increasing")};
  try {
    const auto w = window(s, 0, n);
    const Integer lcm = lcm_window(w);
    const Rational divisor = ap_lcm_divisor(s, n);
    ScanResult res;
    res.claim = "T2_divisor";
    res.params = std::move(params);
    res.exact_lcm = lcm.get_str();
    res.claim_value = divisor.to_string();
    res.verdict = verdict_of(is_integer_multiple(Rational(lcm), divisor));
    return {std::move(res)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroTerm) throw;
    return {not_applicable("T2_divisor", std::move(params), "window contains a zero term")};
  }
}

std::vector<ScanResult> eval_t3(long u0, long r, long n) {
  const ArithmeticProgression s{u0, r};
  auto params = ap_params(u0, r, n);
  if (r < 1 || n < 1 || gcd(s.u0, s.term(1)) != 1) {
    return {not_applicable("T3_equality", std::move(params), "needs r >= 1, n >= 1 and gcd(u0, u1) = 1")};
  }
  try {
    const auto value = ap_lcm_equality(s, n);
    if (!value) return {not_applicable("T3_equality", std::move(params), "u0 u_n is not divisible by n!")};
    const Integer lcm = lcm_window(window(s, 0, n));
    ScanResult res;
    res.claim = "T3_equality";
    res.params = std::move(params);
    res.exact_lcm = lcm.get_str();
    res.claim_value = value->get_str();
    res.verdict = *value == lcm ? Verdict::Equality : Verdict::Violation;
    return {std::move(res)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroTerm) throw;
    return {not_applicable("T3_equality", std::move(params), "window contains a zero term")};
  }
}

std::vector<ScanResult> eval_t4(long u0, long r, long n) {
  const ArithmeticProgression s{u0, r};
  auto params = ap_params(u0, r, n);
  if (!s.is_positive_coprime() || n < 0) {
    return {not_applicable("T4", std::move(params), "needs positive coprime u0 and r")};
  }
  std::vector<ScanResult> out;
  for (const auto& report : ap_lower_bounds(s, n)) out.push_back(from_report(report, params));
  return out;
}

std::vector<ScanResult> eval_conj1(long u0, long r, long n) {
  const ArithmeticProgression s{u0, r};
  auto params = ap_params(u0, r, n);
  if (!s.is_positive_coprime() || n < 0) {
    return {not_applicable("Conjecture1", std::move(params), "needs positive coprime u0 and r")};
  }
  const Integer lcm = lcm_window(window(s, 0, n));
  const Rational bound = ap_strong_lower_bound(s, n);
  ScanResult res;
  res.claim = "Conjecture1";
  res.params = std::move(params);
  res.exact_lcm = lcm.get_str();
  res.claim_value = bound.to_string();
  res.verdict = verdict_of(Rational(lcm) >= bound);
  return {std::move(res)};
}

bool valid_quadratic(long a, long t, long b) { return a >= 1 && t >= 0 && gcd(Integer(a), Integer(b)) == 1; }

std::vector<ScanResult> eval_t7(long a, long t, long b, long m, long n) {
  Params params{{"a", a}, {"t", t}, {"b", b}, {"m", m}, {"n", n}};
  if (!valid_quadratic(a, t, b)) return {not_applicable("T7_divisor", std::move(params), "needs a >= 1, t >= 0, gcd(a, b) = 1")};
  if (m < 0 || m >= n) return {not_applicable("T7_divisor", std::move(params), "needs 0 <= m < n")};
  const QuadraticSequence s(a, t, b);
  try {
    const Integer lcm = lcm_window(window(s, m, n));
    const Rational divisor = quadratic_lcm_divisor(s, m, n);
    ScanResult res;
    res.claim = "T7_divisor";
    res.params = std::move(params);
    res.exact_lcm = lcm.get_str();
    res.claim_value = divisor.to_string();
    res.verdict = verdict_of(is_integer_multiple(Rational(lcm), divisor));
    return {std::move(res)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroTerm) throw;
    return {not_applicable("T7_divisor", std::move(params), "window contains a zero term")};
  }
}

std::vector<ScanResult> eval_c1(long a, long t, long b, long n) {
  Params params{{"a", a}, {"t", t}, {"b", b}, {"n", n}};
  if (!valid_quadratic(a, t, b)) return {not_applicable("C1_bound", std::move(params), "needs a >= 1, t >= 0, gcd(a, b) = 1")};
  if (n < 1) return {not_applicable("C1_bound", std::move(params), "needs n >= 1")};
  const QuadraticSequence s(a, t, b);
  try {
    const Integer lcm = lcm_window(window(s, 0, n));
    const Rational bound = quadratic_lower_bound(s, n);
    ScanResult res;
    res.claim = "C1_bound";
    res.params = std::move(params);
    res.exact_lcm = lcm.get_str();
    res.claim_value = bound.to_string();
    res.verdict = verdict_of(Rational(lcm) >= bound);
    return {std::move(res)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroTerm) throw;
    return {not_applicable("C1_bound", std::move(params), "window contains a zero term")};
  }
}

std::vector<ScanResult> eval_consecutive(bool multiple, long n, long k) {
  Params params{{"n", n}, {"k", k}};
  const char* claim = multiple ? "T9_multiple" : "T8_divisor";
  if (n < 1 || k < 0) return {not_applicable(claim, std::move(params), "needs n >= 1 and k >= 0")};
  const Integer lcm = consecutive_lcm(n, k);
  const Integer value = multiple ? consecutive_multiple(n, k) : consecutive_divisor(n, k);
  const auto equality = multiple ? consecutive_multiple_equality(n, k) : consecutive_divisor_equality(n, k);
  ScanResult res;
  res.claim = claim;
  res.params = std::move(params);
  res.exact_lcm = lcm.get_str();
  res.claim_value = value.get_str();
  const bool divides_ok = multiple ? divides(lcm, value) : divides(value, lcm);
  if (!divides_ok) {
    res.verdict = Verdict::Violation;
  } else if (equality) {
    res.verdict = *equality == lcm ? Verdict::Equality : Verdict::Violation;
  } else {
    res.verdict = Verdict::Holds;
  }
  return {std::move(res)};
}

std::vector<ScanResult> eval_gk(long k, long n) {
  Params params{{"k", k}, {"n", n}};
  if (k < 0 || n < 1) return {not_applicable("GK", std::move(params), "needs k >= 0 and n >= 1")};
  const Integer direct = gk_direct(n, k);
  ScanResult res;
  res.claim = "GK";
  res.params = std::move(params);
  res.claim_value = direct.get_str();
  bool ok = divides(direct, factorial(k));
  if (k == 0) {
    ok = ok && direct == 1;
  } else {
    const Integer previous = gk_direct(n, k - 1);
    const Integer recurrence = gk_recurrence(n, k, previous);
    const Integer closed = gk_closed_form(n, k);
    ok = ok && recurrence == direct && closed == direct;
    if (!ok) res.note = "recurrence " + recurrence.get_str() + ", closed form " + closed.get_str();
  }
  res.verdict = verdict_of(ok);
  return {std::move(res)};
}

std::vector<ScanResult> eval_n2p1(long n, IntRange rs) {
  std::vector<ScanResult> out;
  if (n < 1) {
    out.push_back(not_applicable("N2plus1_headline", {{"n", n}}, "needs n >= 1"));
    return out;
  }
  const Integer lcm = square_plus_one_lcm(n);
  const Rational headline = square_plus_one_headline(n);
  ScanResult h;
  h.claim = "N2plus1_headline";
  h.params = {{"n", n}};
  h.exact_lcm = lcm.get_str();
  h.claim_value = headline.to_string();
  h.verdict = verdict_of(Rational(lcm) >= headline);
  h.note = "0.32 * 1.442^n";
  out.push_back(std::move(h));
  for (long r = rs.lo; r <= rs.hi; ++r) {
    Params params{{"n", n}, {"r", r}};
    if (r < 3 || n < r) {
      out.push_back(not_applicable("N2plus1", std::move(params), "needs 3 <= r <= n"));
      continue;
    }
    const auto bound = square_plus_one_bound(n, r);
    ScanResult exact;
    exact.claim = "N2plus1";
    exact.params = params;
    exact.exact_lcm = lcm.get_str();
    exact.claim_value = bound.exact.to_string();
    exact.verdict = verdict_of(Rational(lcm) >= bound.exact);
    out.push_back(std::move(exact));

    const auto real = RealBound::from_nominal(bound.closed_form);
    ScanResult closed;
    closed.claim = "N2plus1_closed_form";
    closed.params = std::move(params);
    closed.exact_lcm = lcm.get_str();
    closed.claim_value = format_real(real.nominal);
    closed.verdict = verdict_of(meets_real_bound(lcm, real) && bound.exact >= Rational::from_long_double(real.guarded));
    out.push_back(std::move(closed));
  }
  return out;
}

const std::vector<Rational>& identity_points() {
  static const std::vector<Rational> points{Rational(-3),   Rational(-1), Rational(-1, 2), Rational(0),
                                            Rational(1, 2), Rational(1),  Rational(2),     Rational(7, 3)};
  return points;
}

std::vector<ScanResult> eval_identities(long n) {
  std::vector<ScanResult> out;
  if (n < 1) {
    out.push_back(not_applicable("identities", {{"n", n}}, "needs n >= 1"));
    return out;
  }
  for (const auto& x : identity_points()) {
    ScanResult full;
    full.claim = "weighted_binomial";
    full.params = {{"n", n}, {"x", x.to_string()}};
    full.claim_value = (Rational(n) * x * (x + 1).pow(n - 1)).to_string();
    full.verdict = verdict_of(weighted_binomial_identity_check(n, x));
    out.push_back(std::move(full));

    ScanResult odd;
    odd.claim = "odd_weighted_binomial";
    odd.params = {{"n", n}, {"x", x.to_string()}};
    odd.claim_value = (Rational(1, 2) * Rational(n) * x * ((x + 1).pow(n - 1) + (x - 1).pow(n - 1))).to_string();
    odd.verdict = verdict_of(odd_weighted_binomial_identity_check(n, x));
    out.push_back(std::move(odd));
  }
  ScanResult estimate;
  estimate.claim = "central_binomial_estimate";
  estimate.params = {{"n", n}};
  estimate.claim_value = binomial(2 * n + 1, n).get_str();
  estimate.verdict = verdict_of(central_binomial_estimate_check(n));
  out.push_back(std::move(estimate));

  // Partial-fraction identity on 1, 2, ..., n.
  std::vector<Integer> terms;
  for (long i = 1; i <= n; ++i) terms.emplace_back(i);
  const auto w = SequenceWindow::from_terms(std::move(terms));
  const Rational gamma = reciprocal_sum_gamma(w.terms, difference_products(w));
  ScanResult partial;
  partial.claim = "partial_fraction";
  partial.params = {{"n", n}};
  partial.exact_lcm = lcm_window(w).get_str();
  partial.claim_value = gamma.to_string();
  partial.verdict = verdict_of(gamma == Rational(w.product()));
  out.push_back(std::move(partial));
  return out;
}

json params_json(const Params& params) {
  json j = json::object();
  for (const auto& [name, value] : params) {
    std::visit([&, &key = name](const auto& v) { j[key] = v; }, value);
  }
  return j;
}

std::string params_csv(const Params& params) {
  std::string s;
  for (const auto& [name, value] : params) {
    if (!s.empty()) s += ';';
    s += name + '=';
    std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, long>) {
            s += std::to_string(v);
          } else {
            s += v;
          }
        },
        value);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void write_record(const ScanSpec& spec, const ScanResult& r, std::ostream& out) {
  if (spec.format == OutputFormat::Csv) {
    out << to_string(spec.theorem) << ',' << csv_field(r.claim) << ',' << csv_field(params_csv(r.params)) << ','
        << r.exact_lcm << ',' << csv_field(r.claim_value) << ',' << to_string(r.verdict) << ',' << csv_field(r.note);
    if (spec.timings) out << ',' << std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
    out << '\n';
    return;
  }
  json j;
  j["theorem"] = to_string(spec.theorem);
  j["claim"] = r.claim;
  j["params"] = params_json(r.params);
  j["exact_lcm"] = r.exact_lcm;
  j["claim_value"] = r.claim_value;
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  if (spec.timings) j["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
  out << j.dump() << '\n';
}

void write_summary(const ScanSpec& spec, const ScanSummary& s, std::ostream& out) {
  if (spec.format == OutputFormat::Csv) {
    out << "# summary holds=" << s.holds << " equality=" << s.equality << " violation=" << s.violation
        << " not-applicable=" << s.not_applicable << '\n';
    return;
  }
  json j;
  j["summary"] = {{"theorem", to_string(spec.theorem)},
                  {"holds", s.holds},
                  {"equality", s.equality},
                  {"violation", s.violation},
                  {"not-applicable", s.not_applicable}};
  out << j.dump() << '\n';
}

}  // namespace

std::vector<ScanResult> evaluate_case(const ScanSpec& spec, const std::vector<long>& p) {
  switch (spec.theorem) {
    case Theorem::T1: return eval_partial_fraction(p[0], p[1]);
    case Theorem::T2: return eval_t2(p[0], p[1], p[2]);
    case Theorem::T3: return eval_t3(p[0], p[1], p[2]);
    case Theorem::T4: return eval_t4(p[0], p[1], p[2]);
    case Theorem::Conj1: return eval_conj1(p[0], p[1], p[2]);
    case Theorem::T7: return eval_t7(p[0], p[1], p[2], p[3], p[4]);
    case Theorem::C1: return eval_c1(p[0], p[1], p[2], p[3]);
    case Theorem::T8: return eval_consecutive(false, p[0], p[1]);
    case Theorem::T9: return eval_consecutive(true, p[0], p[1]);
    case Theorem::GK: return eval_gk(p[0], p[1]);
    case Theorem::N2P1: return eval_n2p1(p[0], spec.range("r"));
    case Theorem::IDENTITIES: return eval_identities(p[0]);
  }
  return {};
}

ScanSummary run_scan(const ScanSpec& spec, std::ostream& out) {
  spec.validate();
  const auto names = scan_parameters(spec.theorem);
  std::vector<IntRange> ranges;
  std::size_t total = 1;
  for (const auto& name : names) {
    ranges.push_back(spec.range(name));
    total *= ranges.back().size();
  }
  // Mixed-radix decode: the last parameter varies fastest.
  auto tuple_at = [&](std::size_t index) {
    std::vector<long> tuple(ranges.size());
    for (std::size_t d = ranges.size(); d-- > 0;) {
      tuple[d] = ranges[d].lo + static_cast<long>(index % ranges[d].size());
      index /= ranges[d].size();
    }
    return tuple;
  };

  if (spec.format == OutputFormat::Csv) {
    out << "theorem,claim,params,exact_lcm,claim_value,verdict,note" << (spec.timings ? ",elapsed_us" : "") << '\n';
  }
  ScanSummary summary;
  constexpr std::size_t kBlock = 512;
  std::vector<std::vector<ScanResult>> block;
  for (std::size_t start = 0; start < total; start += kBlock) {
    const std::size_t count = std::min(kBlock, total - start);
    block.assign(count, {});
    parallel_for(count, spec.jobs, [&](std::size_t i) {
      const auto begin = std::chrono::steady_clock::now();
      block[i] = evaluate_case(spec, tuple_at(start + i));
      const auto elapsed = std::chrono::steady_clock::now() - begin;
      for (auto& r : block[i]) r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
    });
    for (const auto& results : block) {
      for (const auto& r : results) {
        summary.add(r.verdict);
        write_record(spec, r, out);
      }
    }
    out.flush();
  }
  write_summary(spec, summary, out);
  return summary;
}

// Bound reports --------------------------------------------------------------

namespace {

using ReportParams = std::vector<std::pair<std::string, std::string>>;

BoundReport make_report(BoundName name, const Integer& lcm, BoundValue value, bool holds, ReportParams params,
                        std::string note = {}) {
  BoundReport r;
  r.name = name;
  r.exact_lcm = lcm;
  r.value = std::move(value);
  r.holds = holds;
  r.parameters = std::move(params);
  r.note = std::move(note);
  return r;
}

}  // namespace

std::vector<BoundReport> ap_bound_reports(const ArithmeticProgression& s, long n) {
  s.require_positive_coprime();
  if (n < 0) throw Error(ErrorKind::BadRange, "n = " + std::to_string(n));
  const Integer lcm = lcm_window(window(s, 0, n));
  ReportParams params{{"u0", s.u0.get_str()}, {"r", s.r.get_str()}, {"n", std::to_string(n)}};
  std::vector<BoundReport> out;
  const Rational divisor = ap_lcm_divisor(s, n);
  out.push_back(make_report(BoundName::T2_divisor, lcm, divisor, is_integer_multiple(Rational(lcm), divisor), params));
  if (n >= 1) {
    if (const auto eq = ap_lcm_equality(s, n)) {
      out.push_back(make_report(BoundName::T3_equality, lcm, Rational(*eq), *eq == lcm, params));
    }
  }
  for (auto& report : ap_lower_bounds(s, n)) out.push_back(std::move(report));
  const Rational strong = ap_strong_lower_bound(s, n);
  out.push_back(make_report(BoundName::Conjecture1, lcm, strong, Rational(lcm) >= strong, params));
  return out;
}

std::vector<BoundReport> quadratic_bound_reports(const QuadraticSequence& s, long m, long n) {
  ReportParams params{{"a", s.a().get_str()}, {"t", s.t().get_str()}, {"b", s.b().get_str()},
                      {"m", std::to_string(m)}, {"n", std::to_string(n)}};
  std::vector<BoundReport> out;
  const Rational divisor = quadratic_lcm_divisor(s, m, n);
  const Integer window_lcm = lcm_window(window(s, m, n));
  out.push_back(make_report(BoundName::T7_divisor, window_lcm, divisor, is_integer_multiple(Rational(window_lcm), divisor),
                            params));
  const Integer lcm = lcm_window(window(s, 0, n));
  const Rational bound = quadratic_lower_bound(s, n);
  std::string note = s.a() < 5 ? "nontrivial only for a >= 5" : "";
  out.push_back(make_report(BoundName::C1_bound, lcm, bound, Rational(lcm) >= bound, params, std::move(note)));
  return out;
}

std::vector<BoundReport> consecutive_bound_reports(long n, long k) {
  ReportParams params{{"n", std::to_string(n)}, {"k", std::to_string(k)}};
  const Integer lcm = consecutive_lcm(n, k);
  std::vector<BoundReport> out;
  const Integer divisor = consecutive_divisor(n, k);
  out.push_back(make_report(BoundName::T8_divisor, lcm, Rational(divisor), divides(divisor, lcm), params));
  if (const auto eq = consecutive_divisor_equality(n, k)) {
    out.push_back(make_report(BoundName::T8_equality, lcm, Rational(*eq), *eq == lcm, params));
  }
  const Integer multiple = consecutive_multiple(n, k);
  out.push_back(make_report(BoundName::T9_multiple, lcm, Rational(multiple), divides(lcm, multiple), params));
  if (const auto eq = consecutive_multiple_equality(n, k)) {
    out.push_back(make_report(BoundName::T9_equality, lcm, Rational(*eq), *eq == lcm, params));
  }
  return out;
}

std::vector<BoundReport> square_plus_one_reports(long n, long r) {
  const auto bound = square_plus_one_bound(n, r);
  const Integer lcm = square_plus_one_lcm(n);
  ReportParams params{{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"blocks", std::to_string(bound.blocks)}};
  std::vector<BoundReport> out;
  out.push_back(make_report(BoundName::N2plus1, lcm, bound.exact, Rational(lcm) >= bound.exact, params,
                            "exact 2 (r^2/4)^floor(n/r)"));
  const auto real = RealBound::from_nominal(bound.closed_form);
  out.push_back(make_report(BoundName::N2plus1, lcm, real, meets_real_bound(lcm, real), params,
                            "closed form (8/r^2) ((r/2)^(2/r))^n"));
  const Rational headline = square_plus_one_headline(n);
  out.push_back(make_report(BoundName::N2plus1, lcm, headline, Rational(lcm) >= headline, params, "0.32 * 1.442^n"));
  return out;
}

void write_bound_reports(const std::vector<BoundReport>& reports, std::ostream& out) {
  for (const auto& r : reports) {
    json j;
    j["bound"] = to_string(r.name);
    j["exact_lcm"] = r.exact_lcm.get_str();
    if (const auto* q = std::get_if<Rational>(&r.value)) {
      j["bound_value"] = q->to_string();
      j["value_kind"] = "exact";
    } else {
      const auto& real = std::get<RealBound>(r.value);
      j["bound_value"] = format_real(real.nominal);
      j["value_kind"] = "real";
      j["guarded_value"] = format_real(real.guarded);
    }
    j["holds"] = r.holds;
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["params"] = params;
    if (!r.note.empty()) j["note"] = r.note;
    out << j.dump() << '\n';
  }
}

ClassicSummary run_classic(long nmax, std::ostream& out) {
  if (nmax < 1) throw Error(ErrorKind::BadInput, "nmax must be >= 1");
  ClassicSummary summary;
  Integer lcm = 1;
  Integer two = 1;
  Integer three = 1;
  for (long n = 1; n <= nmax; ++n) {
    lcm = lcmlab::lcm(lcm, Integer(n));
    two *= 2;
    three *= 3;
    const bool lower = lcm >= two;
    const bool upper = lcm <= three;
    std::string lower_verdict;
    if (lower) {
      lower_verdict = "holds";
    } else if (n < 7) {
      lower_verdict = "expected-below-threshold";
    } else {
      lower_verdict = "violation";
    }
    if (!lower) {
      if (!summary.below_threshold.empty() && summary.below_threshold.back().second == n - 1) {
        summary.below_threshold.back().second = n;
      } else {
        summary.below_threshold.emplace_back(n, n);
      }
    }
    if ((!lower && n >= 7) || !upper) ++summary.violations;
    json j;
    j["n"] = n;
    j["lcm"] = lcm.get_str();
    j["lower"] = two.get_str();
    j["upper"] = three.get_str();
    j["lower_verdict"] = lower_verdict;
    j["upper_verdict"] = upper ? "holds" : "violation";
    out << j.dump() << '\n';
  }
  json regions = json::array();
  for (const auto& [lo, hi] : summary.below_threshold) regions.push_back({lo, hi});
  json j;
  j["summary"] = {{"nmax", nmax}, {"below_threshold_regions", regions}, {"violations", summary.violations}};
  out << j.dump() << '\n';
  return summary;
}

}  // namespace lcmlab::harness
