#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affcov/certificate.hpp"
#include "affcov/export.hpp"

namespace py = pybind11;
using namespace affcov;

namespace {

py::dict verify_text(const std::string& text) {
  py::dict out;
  CertificateFile c = parse_certificate(text);
  CertificateCheck chk = verify_certificate(c);
  out["ok"] = chk.ok();
  out["kind"] = to_string(c.witness.kind);
  out["witness_size"] = chk.witness_size;
  out["claimed_bound"] = c.meta.claimed_bound;
  out["problem"] = chk.ok() ? py::object(py::none()) : py::object(py::str(chk.describe()));
  return out;
}

py::dict report_dict(const Graph& g) {
  BoundReport rep = bound_report(g);
  py::dict out;
  for (Param p : kAllParams) {
    const auto& b = rep[p];
    if (!b.defined) {
      out[to_string(p)] = py::none();
      continue;
    }
    py::dict e;
    e["lower"] = b.lower;
    e["verified_lower"] = b.verified_lower;
    e["upper"] = b.upper ? py::object(py::int_(*b.upper)) : py::object(py::none());
    out[to_string(p)] = e;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_affcov, m) {
  m.doc() = "exact affine cover computations";
  m.attr("__version__") = kToolVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph(s, GraphFormat::graph6); })
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges", &Graph::edges)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  m.def("family", [](const std::string& spec) { return family_from_string(spec); }, py::arg("spec"));
  m.def("lva", [](const Graph& g) { return lva_exact(g).value; });
  m.def("vertex_thickness", [](const Graph& g) { return vertex_thickness_exact(g).value; });
  m.def("chromatic_number", [](const Graph& g) { return chromatic_number(g).value; });
  m.def("targets", &target_names);
  m.def(
      "draw",
      [](const Graph& g, const std::string& target, std::uint64_t seed) {
        ConstructionResult r = build_target(g, target, seed);
        r.seed = seed;
        return emit_certificate(make_certificate(r, target));
      },
      py::arg("graph"), py::arg("target"), py::arg("seed") = 1,
      "Certificate JSON for the named construction.");
  m.def("verify", &verify_text, py::arg("certificate"));
  m.def(
      "export",
      [](const std::string& text, const std::string& format) {
        CertificateFile c = parse_certificate(text);
        CertificateCheck chk = verify_certificate(c);
        if (!chk.ok()) throw py::value_error("certificate rejected: " + chk.describe());
        try {
          return export_drawing(*chk.drawing, &c.witness, export_format_from_string(format));
        } catch (const GeometryError& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("certificate"), py::arg("format"));
  m.def("bound_report", &report_dict, py::arg("graph"));
}
