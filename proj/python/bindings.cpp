#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "deltacx/arrangements.hpp"
#include "deltacx/classify.hpp"
#include "deltacx/constructions.hpp"
#include "deltacx/group_action.hpp"
#include "deltacx/homology.hpp"
#include "deltacx/mfs_combinatorics.hpp"
#include "deltacx/serialization.hpp"
#include "deltacx/table.hpp"

namespace py = pybind11;
using namespace deltacx;

namespace {

// JSON crosses the boundary through Python's json module.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& obj) {
  const std::string text = py::isinstance<py::str>(obj)
                               ? obj.cast<std::string>()
                               : py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
}

RegularDeltaComplex valid(const RegularDeltaComplex& k) {
  require_valid(k);
  return k;
}

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<std::int64_t>());
  if (py::isinstance<py::str>(h)) {
    // fractions.Fraction parses "p/q" and rejects junk with ValueError
    const py::object f = py::module_::import("fractions").attr("Fraction")(h);
    return Rational(f.attr("numerator").cast<std::int64_t>(),
                    f.attr("denominator").cast<std::int64_t>());
  }
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return Rational(h.attr("numerator").cast<std::int64_t>(),
                    h.attr("denominator").cast<std::int64_t>());
  }
  throw py::type_error("expected an int, a 'p/q' string or a fractions.Fraction");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regular Delta-complexes: construction, homology and classification";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", error.ptr());

  py::class_<RegularDeltaComplex>(m, "Complex")
      .def(py::init<>(), "The empty complex")
      .def_static(
          "from_json",
          [](const py::object& doc) { return parse_complex_document(from_py(doc)).complex; },
          py::arg("document"), "Parse a ComplexDocument (dict or JSON string)")
      .def("to_json", [](const RegularDeltaComplex& k) { return to_py(to_json(make_document(k))); })
      .def_property_readonly("dim", &RegularDeltaComplex::dim)
      .def_property_readonly("size", &RegularDeltaComplex::size)
      .def_property_readonly("f_vector", &RegularDeltaComplex::f_vector)
      .def_property_readonly("vertices", &RegularDeltaComplex::vertex_labels)
      .def_property_readonly("is_simplicial", [](const RegularDeltaComplex& k) { return is_simplicial(k); })
      .def("cells_of_dim",
           [](const RegularDeltaComplex& k, int d) {
             const auto span = k.cells_of_dim(d);
             return std::vector<CellId>(span.begin(), span.end());
           })
      .def("validate", [](const RegularDeltaComplex& k) { return to_py(to_json(validate(k))); })
      .def("__len__", &RegularDeltaComplex::size)
      .def("__eq__", [](const RegularDeltaComplex& a, const RegularDeltaComplex& b) { return a == b; })
      .def("__repr__", [](const RegularDeltaComplex& k) {
        std::string fv;
        for (std::size_t x : k.f_vector()) fv += (fv.empty() ? "" : ", ") + std::to_string(x);
        return "<deltacx.Complex dim=" + std::to_string(k.dim()) + " f=[" + fv + "]>";
      });

  m.def("standard_simplex", &standard_simplex, py::arg("m"));
  m.def("boundary_simplex", &boundary_simplex, py::arg("m"));
  m.def("nonsimplicial_sphere", &nonsimplicial_sphere, py::arg("n"));
  m.def("skeleton", [](const RegularDeltaComplex& k, int i) { return skeleton(valid(k), i); },
        py::arg("complex"), py::arg("i"));
  m.def("link", [](const RegularDeltaComplex& k, CellId c) { return link(valid(k), c); },
        py::arg("complex"), py::arg("cell"));
  m.def("join",
        [](const RegularDeltaComplex& a, const RegularDeltaComplex& b) { return join(valid(a), valid(b)); },
        py::arg("a"), py::arg("b"));
  m.def("cone", [](const RegularDeltaComplex& k) { return cone(valid(k)); });
  m.def("suspension", [](const RegularDeltaComplex& k) { return suspension(valid(k)); });
  m.def("subdivide",
        [](const RegularDeltaComplex& k) { return barycentric_subdivision(valid(k)).complex; },
        "Barycentric subdivision");
  m.def("is_isomorphic",
        [](const RegularDeltaComplex& a, const RegularDeltaComplex& b) {
          return is_isomorphic(valid(a), valid(b)).has_value();
        });
  m.def("euler_characteristic",
        [](const RegularDeltaComplex& k) { return euler_characteristic(valid(k)); });

  m.def(
      "homology",
      [](const RegularDeltaComplex& k, const std::string& coefficients, bool reduced) {
        Coefficients c;
        if (coefficients == "z") {
          c = Coefficients::kIntegers;
        } else if (coefficients == "z2") {
          c = Coefficients::kMod2;
        } else {
          throw py::value_error("coefficients must be 'z' or 'z2'");
        }
        return to_py(to_json(homology(valid(k), c, reduced)));
      },
      py::arg("complex"), py::arg("coefficients") = "z", py::arg("reduced") = true);

  m.def(
      "classify",
      [](const RegularDeltaComplex& k, std::optional<int> n, std::optional<int> r) {
        std::optional<ClassifyContext> context;
        if (n || r) context = ClassifyContext{n, r, std::nullopt};
        return to_py(to_json(classify(k, context)));
      },
      py::arg("complex"), py::arg("n") = py::none(), py::arg("r") = py::none());

  m.def(
      "build",
      [](const py::object& spec) {
        return to_py(to_json(make_document(dual_complex_from_spec(parse_arrangement_spec(from_py(spec))))));
      },
      py::arg("spec"), "Dual complex of an ArrangementSpec, as a ComplexDocument");

  m.def(
      "quotient",
      [](const py::object& document, const std::string& action) {
        const ComplexDocument doc = parse_complex_document(from_py(document));
        require_valid(doc.complex);
        for (const GroupAction& a : doc.actions) {
          if (action.empty() || a.name == action) {
            const Quotient q = quotient(doc.complex, a);
            py::dict out;
            out["complex"] = q.complex;
            out["subdivisions"] = q.subdivisions;
            return out;
          }
        }
        throw py::key_error(action.empty() ? "document carries no action" : action);
      },
      py::arg("document"), py::arg("action") = "",
      "Quotient of a ComplexDocument by one of its actions");

  m.def(
      "verify_table", [](int n, int r) { return to_py(to_json(verify_table(n, r))); }, py::arg("n"),
      py::arg("r"));

  m.def(
      "boundary_coefficient",
      [](const py::iterable& records) {
        std::vector<DiscrepancyRecord> rs;
        for (const py::handle& rec : records) {
          const py::tuple t = py::reinterpret_borrow<py::object>(rec).cast<py::tuple>();
          if (t.size() != 2) throw py::value_error("records are (discrepancy, multiplicity) pairs");
          rs.push_back({to_rational(t[0]), t[1].cast<std::int64_t>()});
        }
        const Rational q = boundary_coefficient(rs);
        return py::module_::import("fractions").attr("Fraction")(q.numerator(), q.denominator());
      },
      py::arg("records"), "max of 1 - (1 + a) / mult over (a, mult) records");

  m.attr("FORMAT_VERSION") = kFormatVersion;
}
