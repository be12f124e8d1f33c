#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sagbi/error.hpp"
#include "sagbi/format.hpp"
#include "sagbi/groebner.hpp"
#include "sagbi/interpreter.hpp"
#include "sagbi/membership.hpp"
#include "sagbi/parser.hpp"
#include "sagbi/state.hpp"
#include "sagbi/subalgebra.hpp"

namespace py = pybind11;
using namespace sagbi;

namespace {

struct PyRing {
  RingPtr ring;
};

RingPtr makeRing(const std::vector<std::string>& vars, const std::string& order,
                 const std::vector<std::string>& quotient) {
  RingPtr ring = PolyRing::make(vars, parseOrder(order));
  if (quotient.empty()) return ring;
  std::vector<Polynomial> ideal;
  for (const auto& q : quotient) ideal.push_back(parsePolynomial(q, ring));
  return quotientRing(ring, std::move(ideal));
}

SagbiOptions makeOptions(int limit, const std::string& strategy, bool autoSubduce, bool recompute, int printLevel) {
  SagbiOptions o;
  o.limit = limit;
  auto s = parseStrategy(strategy);
  if (!s) fail(ErrorKind::InvalidInput, "unknown strategy '" + strategy + "'");
  o.strategy = *s;
  o.autoSubduce = autoSubduce;
  o.recompute = recompute;
  o.printLevel = printLevel;
  return o;
}

std::string runScript(const std::string& text, int printLevel, bool structured) {
  std::ostringstream out;
  InterpreterOptions opts{printLevel, structured ? OutputFormat::Structured : OutputFormat::Text};
  Interpreter interp(out, opts);
  interp.execute(text);
  interp.finish();
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subalgebra (SAGBI) bases over the rationals";

  static py::exception<Error> sagbiError(m, "SagbiError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(sagbiError.ptr(), (std::string(errorKindName(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PyRing>(m, "Ring")
      .def(py::init([](const std::vector<std::string>& vars, const std::string& order,
                       const std::vector<std::string>& quotient) { return PyRing{makeRing(vars, order, quotient)}; }),
           py::arg("variables"), py::arg("order") = "grevlex", py::arg("quotient") = std::vector<std::string>{})
      .def_static("from_spec", [](const std::string& vars, const std::string& order) {
        return PyRing{makeRing(parseVariableList(vars), order, {})};
      })
      .def("__call__", [](const PyRing& r, const std::string& text) { return parsePolynomial(text, r.ring); })
      .def("parse", [](const PyRing& r, const std::string& text) { return parsePolynomial(text, r.ring); })
      .def_property_readonly("variables", [](const PyRing& r) { return r.ring->variableNames(); })
      .def_property_readonly("order", [](const PyRing& r) { return r.ring->order().toString(); })
      .def("gens", [](const PyRing& r) {
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < r.ring->numVars(); ++i) out.push_back(Polynomial::variable(r.ring, i));
        return out;
      });

  py::class_<Polynomial>(m, "Polynomial")
      .def("__str__", [](const Polynomial& f) { return formatPolynomial(f); })
      .def("__repr__", [](const Polynomial& f) { return "Polynomial(" + formatPolynomial(f) + ")"; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", [](const Polynomial& a, unsigned k) { return a.pow(k); })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("is_zero", &Polynomial::isZero)
      .def("monic", &Polynomial::monic)
      .def("lead_term", [](const Polynomial& f) {
        return formatPolynomial(Polynomial::monomial(f.ring(), f.leadMonomial(), f.leadCoefficient()));
      })
      .def_property_readonly("num_terms", &Polynomial::size);

  py::class_<Subring>(m, "Subring")
      .def(py::init([](const std::vector<Polynomial>& gens, const std::string& symbol) {
             return makeSubring(gens, symbol);
           }),
           py::arg("generators"), py::arg("symbol") = "p")
      .def_property_readonly("generators", &Subring::generators)
      .def("__len__", &Subring::numGenerators);

  py::class_<SagbiBasis>(m, "SagbiBasis")
      .def_property_readonly("generators", &SagbiBasis::generators)
      .def_property_readonly("complete", &SagbiBasis::complete)
      .def_property_readonly("processed_degree", &SagbiBasis::processedDegree)
      .def_property_readonly("subring", &SagbiBasis::subring)
      .def("__repr__", &SagbiBasis::summary);

  m.def(
      "sagbi",
      [](const Subring& s, int limit, const std::string& strategy, bool autoSubduce, bool recompute) {
        return sagbi::sagbi(s, makeOptions(limit, strategy, autoSubduce, recompute, 0));
      },
      py::arg("subring"), py::arg("limit") = 20, py::arg("strategy") = "master", py::arg("auto_subduce") = true,
      py::arg("recompute") = false);
  m.def(
      "resume",
      [](const SagbiBasis& sb, int limit) { return sagbi::sagbi(sb, makeOptions(limit, "master", true, false, 0)); },
      py::arg("basis"), py::arg("limit") = 20);
  m.def("is_sagbi", py::overload_cast<const SagbiBasis&>(&isSAGBI));
  m.def("is_sagbi", py::overload_cast<const Subring&>(&isSAGBI));
  m.def("subduct", [](const std::vector<Polynomial>& gens, const Polynomial& f) { return subduct(gens, f); });
  m.def("normal_form", py::overload_cast<const Polynomial&, const Subring&>(&normalForm));
  m.def("normal_form", py::overload_cast<const Polynomial&, const SagbiBasis&>(&normalForm));
  m.def("quotient_coefficients", py::overload_cast<const Polynomial&, const Subring&>(&quotientCoefficients));
  m.def("groebner_membership_test", &groebnerMembershipTest);
  m.def(
      "subring_intersection",
      [](const Subring& a, const Subring& b, int limit) {
        SagbiOptions o;
        o.limit = limit;
        IntersectedSubring is = subringIntersection(a, b, o);
        return py::make_tuple(is.subring.generators(), is.compositeCertified);
      },
      py::arg("a"), py::arg("b"), py::arg("limit") = 20);
  m.def("save_state", [](const SagbiBasis& sb) { return serializeState(sb); });
  m.def("load_state", [](const std::string& text) { return parseState(text).basis; });
  m.def("run_script", &runScript, py::arg("text"), py::arg("print_level") = 0, py::arg("structured") = false);
}
