#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lcmlab/arith.hpp"
#include "lcmlab/bounds.hpp"
#include "lcmlab/consecutive.hpp"
#include "lcmlab/error.hpp"
#include "lcmlab/harness.hpp"

namespace py = pybind11;

// Big integers cross the boundary as Python int, rationals as fractions.Fraction.
namespace pybind11::detail {

template <>
struct type_caster<lcmlab::Integer> {
  PYBIND11_TYPE_CASTER(lcmlab::Integer, const_name("int"));

  bool load(handle src, bool convert) {
    if (!PyLong_Check(src.ptr())) {
      if (!convert || !PyIndex_Check(src.ptr())) return false;
    }
    const auto text = py::str(py::reinterpret_steal<py::object>(PyNumber_Index(src.ptr())));
    return value.set_str(text.cast<std::string>(), 10) == 0;
  }

  static handle cast(const lcmlab::Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<lcmlab::Rational> {
  PYBIND11_TYPE_CASTER(lcmlab::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = lcmlab::Rational(py::cast<lcmlab::Integer>(src));
      return true;
    }
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    if (!py::isinstance(src, fraction)) return false;
    value = lcmlab::Rational(py::cast<lcmlab::Integer>(src.attr("numerator")),
                             py::cast<lcmlab::Integer>(src.attr("denominator")));
    return true;
  }

  static handle cast(const lcmlab::Rational& v, return_value_policy, handle) {
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::cast(v.num()), py::cast(v.den())).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace lcmlab;

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["bound"] = std::string(to_string(r.name));
  d["exact_lcm"] = r.exact_lcm;
  if (const auto* q = std::get_if<Rational>(&r.value)) {
    d["value"] = *q;
  } else {
    d["value"] = static_cast<double>(std::get<RealBound>(r.value).nominal);
  }
  d["holds"] = r.holds;
  py::dict params;
  for (const auto& [k, v] : r.parameters) params[py::str(k)] = v;
  d["params"] = params;
  d["note"] = r.note;
  return d;
}

py::list report_list(const std::vector<BoundReport>& reports) {
  py::list out;
  for (const auto& r : reports) out.append(report_dict(r));
  return out;
}

py::tuple verify(const std::string& theorem, const std::map<std::string, std::string>& ranges, unsigned jobs,
                 const std::string& format) {
  harness::ScanSpec spec;
  spec.theorem = harness::parse_theorem(theorem);
  spec.jobs = jobs;
  spec.format = harness::parse_format(format);
  for (const auto& [name, text] : ranges) spec.ranges[name] = harness::IntRange::parse(text);
  std::ostringstream os;
  harness::ScanSummary summary;
  {
    py::gil_scoped_release release;
    summary = harness::run_scan(spec, os);
  }
  py::dict counts;
  counts["holds"] = summary.holds;
  counts["equality"] = summary.equality;
  counts["violation"] = summary.violation;
  counts["not-applicable"] = summary.not_applicable;
  return py::make_tuple(os.str(), counts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lcm bounds for integer sequences";
  py::register_exception<Error>(m, "LcmlabError", PyExc_ValueError);

  m.def("gcd", &lcmlab::gcd);
  m.def("lcm", &lcmlab::lcm);
  m.def("lcm_list", [](const std::vector<Integer>& xs) { return lcm_list(xs); });
  m.def("factorial", [](long n) { return lcmlab::factorial(n); });
  m.def("binomial", [](long n, long k) { return lcmlab::binomial(n, k); });
  m.def("valuation", &valuation);
  m.def("is_integer_multiple", &is_integer_multiple);

  m.def("ap_lcm_divisor", [](const Integer& u0, const Integer& r, long n) { return ap_lcm_divisor({u0, r}, n); });
  m.def("ap_lcm_equality", [](const Integer& u0, const Integer& r, long n) { return ap_lcm_equality({u0, r}, n); });
  m.def("ap_lower_bounds",
        [](const Integer& u0, const Integer& r, long n) { return report_list(ap_lower_bounds({u0, r}, n)); });
  m.def("ap_strong_lower_bound",
        [](const Integer& u0, const Integer& r, long n) { return ap_strong_lower_bound({u0, r}, n); });
  m.def("tail_quotient",
        [](const Integer& u0, const Integer& r, long n, long k) { return tail_quotient({u0, r}, n, k); });
  m.def("tail_quotient_argmax",
        [](const Integer& u0, const Integer& r, long n) { return tail_quotient_argmax({u0, r}, n); });
  m.def("ap_bound_reports",
        [](const Integer& u0, const Integer& r, long n) { return report_list(harness::ap_bound_reports({u0, r}, n)); });

  m.def("quadratic_lcm_divisor", [](const Integer& a, const Integer& t, const Integer& b, long m_, long n) {
    return quadratic_lcm_divisor(QuadraticSequence(a, t, b), m_, n);
  });
  m.def("quadratic_lower_bound", [](const Integer& a, const Integer& t, const Integer& b, long n) {
    return quadratic_lower_bound(QuadraticSequence(a, t, b), n);
  });

  m.def("square_plus_one_lcm", &square_plus_one_lcm);
  m.def("square_plus_one_bound", [](long n, long r) {
    const auto b = square_plus_one_bound(n, r);
    return py::make_tuple(b.exact, static_cast<double>(b.closed_form));
  });
  m.def("square_plus_one_headline", &square_plus_one_headline);

  m.def("consecutive_lcm", &consecutive_lcm);
  m.def("consecutive_divisor", &consecutive_divisor);
  m.def("consecutive_multiple", &consecutive_multiple);
  m.def("lcm_binomials", &lcm_binomials);
  m.def("gk_direct", &gk_direct);
  m.def("gk_closed_form", &gk_closed_form);
  m.def(
      "gk_table",
      [](long k, long cap, unsigned jobs) {
        GkTable table;
        {
          py::gil_scoped_release release;
          table = gk_table(k, {cap, jobs});
        }
        return py::make_tuple(table.values, table.smallest_period);
      },
      py::arg("k"), py::arg("cap") = kDefaultGkCap, py::arg("jobs") = 1u);

  m.def("verify", &verify, py::arg("theorem"), py::arg("ranges") = std::map<std::string, std::string>{},
        py::arg("jobs") = 1u, py::arg("format") = "json-lines",
        "Run a scan; returns (output text, verdict counts).");
  m.def("classic", [](long nmax) {
    std::ostringstream os;
    const auto summary = harness::run_classic(nmax, os);
    return py::make_tuple(os.str(), summary.violations, summary.below_threshold);
  });
}
