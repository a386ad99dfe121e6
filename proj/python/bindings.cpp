#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smcnets/cli.hpp"
#include "smcnets/correctness.hpp"
#include "smcnets/equivalence.hpp"
#include "smcnets/errors.hpp"
#include "smcnets/net_io.hpp"
#include "smcnets/theory.hpp"
#include "smcnets/translate.hpp"

namespace py = pybind11;
using namespace smcnets;

namespace {

py::list edges(const Net& n) {
  py::list out;
  for (const auto& [s, t] : n.linking()) out.append(py::make_tuple(to_string(s), to_string(t)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_smcnets, m) {
  m.doc() = "Proof nets for free symmetric monoidal closed categories";

  static py::exception<Error> error(m, "SmcError", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<TypeError> type_error(m, "SmcTypeError", PyExc_TypeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const TypeError& e) {
      py::set_error(type_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Formula>(m, "Formula")
      .def_static("parse", [](const std::string& text) { return parse_formula_open(text); })
      .def_property_readonly("size", &Formula::size)
      .def_property_readonly("leaf_count", &Formula::leaf_count)
      .def(py::self == py::self)
      .def("__str__", [](const Formula& f) { return to_string(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + to_string(f) + "')"; });

  py::class_<Arity>(m, "Arity")
      .def_readonly("source", &Arity::source)
      .def_readonly("target", &Arity::target)
      .def("__str__", [](const Arity& a) { return to_string(a); });

  py::class_<Term>(m, "Term")
      .def_property_readonly("depth", &Term::depth)
      .def_property_readonly("size", &Term::size)
      .def(py::self == py::self)
      .def("__str__", [](const Term& t) { return to_string(t); })
      .def("__repr__", [](const Term& t) { return "Term('" + to_string(t) + "')"; });

  py::class_<Theory>(m, "Theory")
      .def_property_readonly("sorts", [](const Theory& th) { return th.signature.sorts(); })
      .def_property_readonly("ops", [](const Theory& th) { return th.signature.op_order(); })
      .def_property_readonly("equations", [](const Theory& th) {
        std::vector<std::string> names;
        for (const Equation& e : th.equations) names.push_back(e.name);
        return names;
      })
      .def("term", [](const Theory& th, const std::string& text) { return parse_term(text, th.signature); },
           py::arg("text"))
      .def("arity", [](const Theory& th, const Term& t) { return infer_type(t, th.signature); })
      .def("translate", [](const Theory& th, const Term& t) {
        infer_type(t, th.signature);
        return translate(t, th.signature);
      })
      .def("net_from_json", [](const Theory& th, const std::string& text) { return net_from_json(text, &th.signature); });

  py::class_<Net>(m, "Net")
      .def_property_readonly("dom", &Net::dom)
      .def_property_readonly("cod", &Net::cod)
      .def_property_readonly("support", &Net::support_labels)
      .def_property_readonly("edges", &edges)
      .def("to_json", &net_to_json)
      .def("to_dot", &net_to_dot)
      .def(py::self == py::self)
      .def("__repr__", [](const Net& n) { return "Net(" + to_string(n.dom()) + " -> " + to_string(n.cod()) + ")"; });

  py::class_<SearchResult>(m, "SearchResult")
      .def_property_readonly("equal", &SearchResult::equal)
      .def_readonly("terms_explored", &SearchResult::terms_explored)
      .def_property_readonly("trace", [](const SearchResult& r) {
        std::vector<std::string> out;
        for (const RewriteStep& s : r.trace) out.push_back(to_string(s));
        return out;
      });

  m.def("parse_theory", &parse_theory, py::arg("text"));
  m.def("load_theory", &load_theory, py::arg("path"));
  m.def("net_from_json", [](const std::string& text) { return net_from_json(text, nullptr); }, py::arg("text"));
  m.def("identity_net", &identity_net, py::arg("formula"));
  m.def("compose", &compose, py::arg("f"), py::arg("g"), "f then g");
  m.def("tensor", &tensor, py::arg("f"), py::arg("g"));
  m.def("curry", &curry, py::arg("net"));
  m.def("uncurry", &uncurry, py::arg("net"));
  m.def("is_correct", &is_correct, py::arg("net"));
  m.def("par_count", &par_count, py::arg("net"));
  m.def("support_iso_equal", &support_iso_equal, py::arg("f"), py::arg("g"));
  m.def("nets_equal", &nets_equal, py::arg("f"), py::arg("g"));
  m.def("rewire_moves", &rewire_moves, py::arg("net"));
  m.def("theory_equal_bounded", &theory_equal_bounded, py::arg("t1"), py::arg("t2"), py::arg("theory"),
        py::arg("depth"));
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        cli::Result r = cli::run(args);
        return py::make_tuple(r.status, r.out, r.err);
      },
      py::arg("args"), "Run a CLI command; returns (status, stdout, stderr).");
}
