#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lcmlab/bounds.hpp"
#include "lcmlab/consecutive.hpp"
#include "lcmlab/error.hpp"
#include "lcmlab/harness.hpp"

namespace {

using namespace lcmlab;

constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

int report_exit(const std::vector<BoundReport>& reports) {
  harness::write_bound_reports(reports, std::cout);
  for (const auto& r : reports) {
    if (!r.holds) return kExitViolation;
  }
  return 0;
}

long gk_cap_from_env() {
  const char* env = std::getenv("LCMLAB_GK_CAP");
  if (env == nullptr || *env == '\0') return kDefaultGkCap;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 0) throw Error(ErrorKind::BadInput, std::string("LCMLAB_GK_CAP is not a non-negative integer: ") + env);
  return cap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lcm bounds for integer sequences"};
  app.require_subcommand(1);

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate the bounds for one sequence");
  bound->require_subcommand(1);
  std::string u0 = "1", r = "1";
  long n = 0, k = 0, m = 0;
  std::string a = "1", t = "0", b = "1";
  long rr = 3;

  auto* ap = bound->add_subcommand("ap", "Arithmetic progression u0 + k r");
  ap->add_option("--u0", u0, "First term")->required();
  ap->add_option("--r", r, "Common difference")->required();
  ap->add_option("--n", n, "Last index")->required();

  auto* quad = bound->add_subcommand("quad", "Quadratic sequence a k (k + t) + b");
  quad->add_option("--a", a)->required();
  quad->add_option("--t", t)->required();
  quad->add_option("--b", b)->required();
  quad->add_option("--m", m, "First index of the window");
  quad->add_option("--n", n, "Last index")->required();

  auto* consecutive = bound->add_subcommand("consecutive", "Consecutive integers n..n+k");
  consecutive->add_option("--n", n)->required();
  consecutive->add_option("--k", k)->required();

  auto* n2p1 = bound->add_subcommand("n2plus1", "The sequence k^2 + 1");
  n2p1->add_option("--n", n)->required();
  n2p1->add_option("--r", rr, "Block length (>= 3)");

  // verify
  auto* verify = app.add_subcommand("verify", "Scan a theorem over parameter ranges");
  std::string theorem_name;
  std::map<std::string, std::string> range_text;
  unsigned jobs = 1;
  std::string format = "json-lines";
  std::string output;
  bool timings = false;
  verify->add_option("--theorem", theorem_name, "T1 T2 T3 T4 Conj1 T7 C1 T8 T9 GK N2P1 IDENTITIES")->required();
  for (const char* name : {"seed", "len", "u0", "r", "n", "a", "t", "b", "m", "k"}) {
    verify->add_option(std::string("--") + name, range_text[name], "Inclusive range a..b");
  }
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json-lines or csv");
  verify->add_option("--output", output, "Write records to this file");
  verify->add_flag("--timings", timings, "Include per-record elapsed time");

  // gk
  auto* gk = app.add_subcommand("gk", "Tabulate g_k over one period of k!");
  long gk_k = 0;
  std::string gk_output;
  bool check_closed_form = false;
  unsigned gk_jobs = 1;
  gk->add_option("k", gk_k)->required();
  gk->add_option("--output", gk_output, "CSV path (default gk_<k>.csv)");
  gk->add_flag("--check-closed-form", check_closed_form, "Cross-check every entry against the other formulas");
  gk->add_option("--jobs", gk_jobs)->check(CLI::PositiveNumber);

  // classic
  auto* classic = app.add_subcommand("classic", "Check 2^n <= lcm(1..n) <= 3^n");
  long nmax = 1;
  classic->add_option("--nmax", nmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*bound) {
      if (*ap) {
        const ArithmeticProgression s{Integer(u0), Integer(r)};
        return report_exit(harness::ap_bound_reports(s, n));
      }
      if (*quad) {
        const QuadraticSequence s{Integer(a), Integer(t), Integer(b)};
        return report_exit(harness::quadratic_bound_reports(s, m, n));
      }
      if (*consecutive) return report_exit(harness::consecutive_bound_reports(n, k));
      return report_exit(harness::square_plus_one_reports(n, rr));
    }

    if (*verify) {
      harness::ScanSpec spec;
      spec.theorem = harness::parse_theorem(theorem_name);
      spec.jobs = jobs;
      spec.format = harness::parse_format(format);
      spec.timings = timings;
      for (const auto& [name, text] : range_text) {
        if (!text.empty()) spec.ranges[name] = harness::IntRange::parse(text);
      }
      spec.validate();
      harness::ScanSummary summary;
      if (output.empty()) {
        summary = harness::run_scan(spec, std::cout);
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw Error(ErrorKind::BadInput, "cannot open " + output);
        summary = harness::run_scan(spec, file);
      }
      return summary.violation == 0 ? 0 : kExitViolation;
    }

    if (*gk) {
      const auto table = gk_table(gk_k, {gk_cap_from_env(), gk_jobs});
      bool consistent = true;
      if (check_closed_form && gk_k >= 1) {
        for (long i = 0; i < static_cast<long>(table.values.size()) && consistent; ++i) {
          const long x = i + 1;
          const Integer direct = gk_direct(x, gk_k);
          consistent = direct == table.values[i] && gk_closed_form(x, gk_k) == direct &&
                       gk_recurrence(x, gk_k, gk_direct(x, gk_k - 1)) == direct;
          if (!consistent) std::cerr << "mismatch at n=" << x << '\n';
        }
      }
      const std::string path = gk_output.empty() ? "gk_" + std::to_string(gk_k) + ".csv" : gk_output;
      std::ofstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorKind::BadInput, "cannot open " + path);
      table.write_csv(file);
      std::cout << "k=" << gk_k << " period=" << table.smallest_period << '\n';
      return consistent ? 0 : kExitViolation;
    }

    const auto summary = harness::run_classic(nmax, std::cout);
    return summary.violations == 0 ? 0 : kExitViolation;
  } catch (const Error& e) {
    std::cerr << "lcmlab: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lcmlab: not an integer\n";
    return kExitInput;
  }
}
