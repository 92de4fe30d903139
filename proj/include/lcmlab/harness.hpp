#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lcmlab/bounds.hpp"

namespace lcmlab::harness {

enum class Verdict { Holds, Equality, Violation, NotApplicable };
enum class Theorem { T1, T2, T3, T4, Conj1, T7, C1, T8, T9, GK, N2P1, IDENTITIES };
enum class OutputFormat { JsonLines, Csv };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Theorem t) noexcept;
Theorem parse_theorem(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// Inclusive integer range written `a..b` or a single value `a`.
struct IntRange {
  long lo = 0;
  long hi = 0;

  static IntRange parse(std::string_view text);
  std::size_t size() const noexcept { return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Names of the ranges a theorem is scanned over, outermost first.
std::vector<std::string> scan_parameters(Theorem t);
/// Range used for a parameter the caller did not set.
IntRange default_range(Theorem t, std::string_view parameter);

struct ScanSpec {
  Theorem theorem = Theorem::T2;
  std::map<std::string, IntRange> ranges;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::JsonLines;
  bool timings = false;

  /// Range for a parameter, falling back to default_range. Throws EmptyRange.
  IntRange range(std::string_view parameter) const;
  /// Checks jobs >= 1, non-empty ranges and that every given range is known.
  void validate() const;
};

using ParamValue = std::variant<long, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct ScanResult {
  std::string claim;
  Params params;
  std::string exact_lcm;
  std::string claim_value;
  Verdict verdict = Verdict::Holds;
  std::string note;
  std::chrono::nanoseconds elapsed{0};
};

struct ScanSummary {
  std::size_t holds = 0;
  std::size_t equality = 0;
  std::size_t violation = 0;
  std::size_t not_applicable = 0;

  std::size_t total() const noexcept { return holds + equality + violation + not_applicable; }
  void add(Verdict v);
};

/// Results for one parameter tuple (values in scan_parameters order).
std::vector<ScanResult> evaluate_case(const ScanSpec& spec, const std::vector<long>& tuple);

/// Streams every record in lexicographic parameter order followed by a
/// summary line. Output is byte-identical for any worker count.
ScanSummary run_scan(const ScanSpec& spec, std::ostream& out);

// Bound reports for the `bound` subcommand ------------------------------------

std::vector<BoundReport> ap_bound_reports(const ArithmeticProgression& s, long n);
std::vector<BoundReport> quadratic_bound_reports(const QuadraticSequence& s, long m, long n);
std::vector<BoundReport> consecutive_bound_reports(long n, long k);
std::vector<BoundReport> square_plus_one_reports(long n, long r);

/// One JSON object per line.
void write_bound_reports(const std::vector<BoundReport>& reports, std::ostream& out);

// Classic estimates for lcm(1..n) ----------------------------------------------

struct ClassicSummary {
  std::size_t violations = 0;
  std::vector<std::pair<long, long>> below_threshold;  // maximal runs with lcm(1..n) < 2^n
};

/// For n = 1..nmax checks lcm(1..n) <= 3^n always and 2^n <= lcm(1..n) for n >= 7.
ClassicSummary run_classic(long nmax, std::ostream& out);

/// "%.20Lg" rendering used for every real value in reports.
std::string format_real(long double value);

}  // namespace lcmlab::harness
