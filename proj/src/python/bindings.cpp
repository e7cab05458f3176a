// Thin Python surface; structured results cross the boundary as JSON text.
#include "lpa/battery.hpp"
#include "lpa/centroid.hpp"
#include "lpa/classifier.hpp"
#include "lpa/comet_iso.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

std::string analyze(const std::string &graph) { return lpa::properties_json(lpa::parse_graph(graph)).dump(); }

std::string centroid(const std::string &graph, std::size_t degree, bool certify) {
  if (degree < 1) throw py::value_error("degree must be at least 1");
  lpa::ReportOptions opts;
  opts.certify = certify;
  py::gil_scoped_release release;
  return lpa::centroid_report(lpa::parse_graph(graph), "<python>", degree, opts).dump();
}

std::string multiply(const std::string &graph, const std::string &lhs, const std::string &rhs) {
  lpa::Algebra alg(lpa::parse_graph(graph));
  return (lpa::parse_element(alg, lhs) * lpa::parse_element(alg, rhs)).to_string();
}

std::string normal_form(const std::string &graph, const std::string &expr) {
  lpa::Algebra alg(lpa::parse_graph(graph));
  return lpa::parse_element(alg, expr).to_string();
}

std::size_t seed_space_dimension(const std::string &graph, std::size_t degree) {
  lpa::Algebra alg(lpa::parse_graph(graph));
  py::gil_scoped_release release;
  return lpa::seed_space(alg, degree).dimension();
}

std::vector<std::vector<std::string>> comet_matrix(const std::string &graph, const std::string &expr) {
  lpa::Algebra alg(lpa::parse_graph(graph));
  lpa::CometIso iso(alg);
  lpa::LaurentMatrix m = iso.apply(lpa::parse_element(alg, expr));
  std::vector<std::vector<std::string>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i].push_back(m.at(i, j).to_string());
  return out;
}

std::string corpus(const std::string &dir, std::size_t degree) {
  py::gil_scoped_release release;
  return lpa::corpus_json(lpa::corpus_run(dir, degree), degree).dump();
}

std::string verify(const std::string &dir, std::uint64_t seed) {
  lpa::BatteryOptions opts;
  opts.seed = seed;
  py::gil_scoped_release release;
  return lpa::verify_json(lpa::verify_corpus(dir, opts)).dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Leavitt path algebras over Q: classification and centroid certificates";

  py::register_exception<lpa::GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<lpa::ElementParseError>(m, "ElementParseError", PyExc_ValueError);

  m.def("analyze", &analyze, py::arg("graph"));
  m.def("centroid", &centroid, py::arg("graph"), py::arg("degree") = 3, py::arg("certify") = true);
  m.def("multiply", &multiply, py::arg("graph"), py::arg("lhs"), py::arg("rhs"));
  m.def("normal_form", &normal_form, py::arg("graph"), py::arg("expr"));
  m.def("seed_space_dimension", &seed_space_dimension, py::arg("graph"), py::arg("degree"));
  m.def("comet_matrix", &comet_matrix, py::arg("graph"), py::arg("expr"));
  m.def("corpus", &corpus, py::arg("directory"), py::arg("degree") = 3);
  m.def("verify", &verify, py::arg("directory"), py::arg("seed") = 20240601);
}
