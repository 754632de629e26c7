#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "godel/characteristics.hpp"
#include "godel/counting.hpp"
#include "godel/errors.hpp"
#include "godel/formula.hpp"
#include "godel/oracle.hpp"
#include "godel/patterns.hpp"
#include "godel/semantics.hpp"
#include "godel/valuations.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const godel::BigInt& v) {
  // Decimal round-trip keeps arbitrary precision.
  PyObject* obj = PyLong_FromString(godel::to_decimal(v).c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py(const godel::Rational& v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(godel::to_ratio(v));
}

py::list to_py(const std::vector<godel::BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

godel::Rational to_rational(const py::handle& value) {
  // Python ints and Fractions both expose exact numerator/denominator.
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    const std::string num = py::str(value.attr("numerator"));
    const std::string den = py::str(value.attr("denominator"));
    return godel::Rational(godel::BigInt(num), godel::BigInt(den));
  }
  throw py::type_error("expected an int or fractions.Fraction");
}

py::dict report_to_dict(const godel::ChiReport& report) {
  py::dict out;
  out["formula"] = report.formula;
  out["n"] = report.n;
  out["chi"] = to_py(report.chi);
  out["p"] = to_py(report.p_row);
  out["boolean_models"] = to_py(report.boolean_models);
  out["classical_tautology"] = report.classical_tautology;
  out["classical_contradiction"] = report.classical_contradiction;
  out["godel_infinity_tautology"] = report.godel_infinity_tautology;
  out["least_k_not_tautology"] = report.least_k_not_tautology
                                     ? py::object(py::int_(*report.least_k_not_tautology))
                                     : py::object(py::none());
  return out;
}

}  // namespace

PYBIND11_MODULE(_godelchi, m) {
  m.doc() = "Generalised Euler characteristics of Goedel-logic formulas";

  py::register_exception<godel::ParseError>(m, "FormulaParseError", PyExc_ValueError);
  py::register_exception<godel::GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::class_<godel::Formula>(m, "Formula")
      .def_static("parse", &godel::parse, py::arg("text"))
      .def("__str__", [](const godel::Formula& f) { return godel::to_string(f); })
      .def("__repr__",
           [](const godel::Formula& f) { return "Formula(\"" + godel::to_string(f) + "\")"; })
      .def("__eq__", [](const godel::Formula& a, const godel::Formula& b) { return a == b; })
      .def("max_var", &godel::max_var);

  py::class_<godel::OrderPattern>(m, "OrderPattern")
      .def(py::init<int, int, std::vector<int>>(), py::arg("n"), py::arg("num_blocks"),
           py::arg("levels"))
      .def_property_readonly("n", &godel::OrderPattern::vars)
      .def_property_readonly("height", &godel::OrderPattern::height)
      .def_property_readonly("levels",
                             [](const godel::OrderPattern& p) {
                               return std::vector<int>(p.levels().begin(), p.levels().end());
                             })
      .def("zero_block", &godel::OrderPattern::zero_block)
      .def("blocks", &godel::OrderPattern::blocks)
      .def("one_block", &godel::OrderPattern::one_block)
      .def("parent",
           [](const godel::OrderPattern& p) -> py::object {
             const auto up = p.parent();
             return up ? py::cast(*up) : py::object(py::none());
           })
      .def("__str__", &godel::OrderPattern::to_string)
      .def("__repr__",
           [](const godel::OrderPattern& p) { return "OrderPattern(" + p.to_string() + ")"; })
      .def("__eq__",
           [](const godel::OrderPattern& a, const godel::OrderPattern& b) { return a == b; })
      .def("__hash__",
           [](const godel::OrderPattern& p) { return godel::OrderPatternHash{}(p); });

  m.def(
      "parse", [](const std::string& text) { return godel::parse(text); }, py::arg("text"));
  m.def(
      "eval",
      [](const godel::Formula& f, const std::vector<int>& values, int top) {
        return godel::eval(f, godel::LevelAssignment(static_cast<int>(values.size()), top, values));
      },
      py::arg("formula"), py::arg("values"), py::arg("top"),
      "Value of the formula at the assignment; values[i] is the level of X(i+1)");
  m.def(
      "pattern_of",
      [](const std::vector<int>& values, int top) {
        return godel::pattern_of(
            godel::LevelAssignment(static_cast<int>(values.size()), top, values));
      },
      py::arg("values"), py::arg("top"));
  m.def("satisfies", &godel::satisfies, py::arg("pattern"), py::arg("formula"));
  m.def(
      "patterns",
      [](int n, int max_height, std::size_t max_patterns) {
        return godel::all_patterns(n, max_height, max_patterns);
      },
      py::arg("n"), py::arg("max_height"), py::arg("max_patterns") = std::size_t{1'000'000});

  m.def(
      "tree_count", [](int n, int k) { return to_py(godel::CountTable().tree_count(n, k)); },
      py::arg("n"), py::arg("k"), "T(n,k): join-irreducibles of height exactly k in the maximal tree");
  m.def(
      "class_count", [](int n, int k) { return to_py(godel::CountTable().class_count(n, k)); },
      py::arg("n"), py::arg("k"), "P(n,k): assignment classes of height <= k");
  m.def(
      "class_table",
      [](int max_n, int max_k) {
        py::list out;
        for (const auto& row : godel::CountTable().class_table(max_n, max_k)) out.append(to_py(row));
        return out;
      },
      py::arg("max_n"), py::arg("max_k"));

  m.def(
      "chi",
      [](const godel::Formula& f, int n, int k, int threads) {
        return to_py(godel::chi(f, n, k, threads));
      },
      py::arg("formula"), py::arg("n"), py::arg("k"), py::arg("threads") = 0);
  m.def(
      "chi_report",
      [](const godel::Formula& f, int n, int threads) {
        return report_to_dict(godel::chi_vector(f, n, threads));
      },
      py::arg("formula"), py::arg("n"), py::arg("threads") = 0);
  m.def(
      "boolean_models",
      [](const godel::Formula& f, int n) { return to_py(godel::boolean_models(f, n)); },
      py::arg("formula"), py::arg("n"));
  m.def("is_tautology_gk", &godel::is_tautology_gk, py::arg("formula"), py::arg("n"), py::arg("k"),
        py::arg("threads") = 0);
  m.def("is_tautology_ginf", &godel::is_tautology_ginf, py::arg("formula"), py::arg("n"),
        py::arg("threads") = 0);
  m.def("equivalent", &godel::equivalent, py::arg("f"), py::arg("g"), py::arg("n"));

  py::class_<godel::Valuation>(m, "Valuation")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &godel::Valuation::vars)
      .def_static("indicator", &godel::Valuation::indicator, py::arg("pattern"))
      .def("weight",
           [](const godel::Valuation& nu, const godel::OrderPattern& p) {
             return to_py(nu.weight(p));
           })
      .def("set_weight",
           [](godel::Valuation& nu, const godel::OrderPattern& p, const py::object& w) {
             nu.set_weight(p, to_rational(w));
           })
      .def("__add__", [](const godel::Valuation& a, const godel::Valuation& b) { return a + b; })
      .def("__sub__", [](const godel::Valuation& a, const godel::Valuation& b) { return a - b; })
      .def("__mul__",
           [](const godel::Valuation& a, const py::object& s) { return a * to_rational(s); })
      .def("__rmul__",
           [](const godel::Valuation& a, const py::object& s) { return a * to_rational(s); });

  m.def(
      "chi_as_valuation",
      [](int n, int k, std::size_t max_patterns) {
        return godel::chi_as_valuation(n, k, max_patterns);
      },
      py::arg("n"), py::arg("k"), py::arg("max_patterns") = godel::kDenseValuationGuard);
  m.def(
      "value_at_pattern",
      [](const godel::Valuation& nu, const godel::OrderPattern& p) {
        return to_py(godel::value_at_pattern(nu, p));
      },
      py::arg("valuation"), py::arg("pattern"));
  m.def(
      "value_at_formula",
      [](const godel::Valuation& nu, const godel::Formula& f) {
        return to_py(godel::value_at_formula(nu, f));
      },
      py::arg("valuation"), py::arg("formula"));
  m.def("maximal_chain", &godel::maximal_chain, py::arg("n"));
  m.def(
      "independence_determinant",
      [](int n) { return to_py(godel::determinant(godel::independence_matrix(n))); },
      py::arg("n"));
  m.def("invariant_dimension", &godel::invariant_dimension, py::arg("n"),
        py::arg("max_patterns") = godel::kDenseValuationGuard);
  m.def("is_invariant", &godel::is_invariant, py::arg("valuation"));
  m.def(
      "in_span_of_chis",
      [](const godel::Valuation& nu, std::size_t max_patterns) -> py::object {
        const auto coefficients = godel::in_span_of_chis(nu, max_patterns);
        if (!coefficients) return py::none();
        py::list out;
        for (const auto& r : *coefficients) out.append(to_py(r));
        return out;
      },
      py::arg("valuation"), py::arg("max_patterns") = godel::kDenseValuationGuard);
  m.def(
      "space_dims",
      [](int n, std::size_t max_patterns) {
        const godel::SpaceDims d = godel::space_dims(n, max_patterns);
        py::dict out;
        out["c"] = d.c;
        out["i_perm"] = d.i_perm;
        out["v"] = to_py(d.v);
        return out;
      },
      py::arg("n"), py::arg("max_patterns") = godel::kDenseValuationGuard);

  m.def(
      "brute_chi",
      [](const godel::Formula& f, int n, int k, std::uint64_t max_assignments) {
        return to_py(godel::brute_chi(f, n, k, max_assignments));
      },
      py::arg("formula"), py::arg("n"), py::arg("k"),
      py::arg("max_assignments") = godel::kOracleAssignmentGuard);
  m.def(
      "brute_class_count",
      [](int n, int k, std::uint64_t max_assignments) {
        return to_py(godel::brute_class_count(n, k, max_assignments));
      },
      py::arg("n"), py::arg("k"), py::arg("max_assignments") = godel::kOracleAssignmentGuard);
  m.def(
      "brute_equivalence",
      [](const std::vector<int>& a, const std::vector<int>& b, int top) {
        return godel::brute_equivalence(
            godel::LevelAssignment(static_cast<int>(a.size()), top, a),
            godel::LevelAssignment(static_cast<int>(b.size()), top, b));
      },
      py::arg("a"), py::arg("b"), py::arg("top"));
}
