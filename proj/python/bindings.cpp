#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "fparadox/error.hpp"
#include "fparadox/experiment.hpp"
#include "fparadox/fit.hpp"
#include "fparadox/metrics.hpp"
#include "fparadox/netgen.hpp"
#include "fparadox/powerlaw.hpp"

namespace py = pybind11;
using namespace fparadox;

namespace {

Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Friendship-paradox analytics for truncated power-law networks";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.attr("INFINITE") = kInfinite;
  m.attr("SWITCH_EPS") = kSwitchEps;

  py::enum_<Branch>(m, "Branch")
      .value("GENERAL", Branch::General)
      .value("LIMIT_ALPHA_2", Branch::LimitAlpha2)
      .value("LIMIT_ALPHA_3", Branch::LimitAlpha3)
      .value("DEGENERATE", Branch::Degenerate);

  py::enum_<Model>(m, "Model").value("A", Model::A).value("B", Model::B).value("KALISKY", Model::Kalisky);

  py::enum_<Moment>(m, "Moment")
      .value("MEAN", Moment::Mean)
      .value("VARIANCE", Moment::Variance)
      .value("VAR_TO_MEAN", Moment::VarToMean);

  py::class_<PowerLawSpec>(m, "PowerLawSpec")
      .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("k_min") = 1.0,
           py::arg("k_max") = kInfinite)
      .def_readwrite("alpha", &PowerLawSpec::alpha)
      .def_readwrite("k_min", &PowerLawSpec::k_min)
      .def_readwrite("k_max", &PowerLawSpec::k_max)
      .def("__repr__", [](const PowerLawSpec& s) {
        std::ostringstream os;
        os << "PowerLawSpec(alpha=" << s.alpha << ", k_min=" << s.k_min << ", k_max=" << s.k_max << ")";
        return os.str();
      });

  py::class_<PredictionResult>(m, "PredictionResult")
      .def_readonly("c", &PredictionResult::c)
      .def_readonly("mean_k", &PredictionResult::mean_k)
      .def_readonly("second_moment", &PredictionResult::second_moment)
      .def_readonly("variance", &PredictionResult::variance)
      .def_readonly("var_to_mean", &PredictionResult::var_to_mean)
      .def_readonly("k_ff", &PredictionResult::k_ff)
      .def_readonly("branch", &PredictionResult::branch);

  py::class_<ParadoxStats>(m, "ParadoxStats")
      .def_readonly("n", &ParadoxStats::n)
      .def_readonly("mean_k", &ParadoxStats::mean_k)
      .def_readonly("second_moment", &ParadoxStats::second_moment)
      .def_readonly("variance", &ParadoxStats::variance)
      .def_readonly("k_ff", &ParadoxStats::k_ff)
      .def_readonly("gap", &ParadoxStats::gap);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("alpha_hat", &FitResult::alpha_hat)
      .def_readonly("stderr", &FitResult::stderr_alpha)
      .def_readonly("k_min_used", &FitResult::k_min_used)
      .def_readonly("k_max_used", &FitResult::k_max_used)
      .def_readonly("n_tail", &FitResult::n_tail)
      .def_readonly("ks_distance", &FitResult::ks_distance);

  py::class_<GeneratorOptions>(m, "GeneratorOptions")
      .def(py::init<>())
      .def_readwrite("block_size", &GeneratorOptions::block_size)
      .def_readwrite("swap_factor", &GeneratorOptions::swap_factor);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("degrees", &Graph::degrees)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) throw py::index_error();
        auto adj = g.neighbors(v);
        return std::vector<Vertex>(adj.begin(), adj.end());
      })
      .def("to_edge_list", [](const Graph& g) {
        std::ostringstream os;
        write_edge_list(os, g);
        return os.str();
      });

  m.def("normalization_constant", &normalization_constant, py::arg("spec"));
  m.def("pdf", &pdf, py::arg("spec"), py::arg("k"));
  m.def("cdf", &cdf, py::arg("spec"), py::arg("k"));
  m.def("predict", &predict, py::arg("spec"));
  m.def("sample_continuous", &sample_continuous, py::arg("spec"), py::arg("n"), py::arg("seed"));
  m.def("sample_degrees", &sample_degrees, py::arg("spec"), py::arg("n"), py::arg("seed"));

  m.def("make_graphical", &make_graphical, py::arg("seq"), py::arg("seed") = 0);
  m.def("generate", &generate, py::arg("seq"), py::arg("model"), py::arg("seed"),
        py::arg("options") = GeneratorOptions{}, py::call_guard<py::gil_scoped_release>());
  m.def("drop_report", [](const Graph& g, const DegreeSequence& seq) {
    auto r = drop_report(g, seq);
    return py::make_tuple(r.per_vertex, r.total);
  }, py::arg("graph"), py::arg("seq"));
  m.def("read_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  }, py::arg("text"));

  m.def("stats_from_degrees", [](const std::vector<std::int64_t>& d) { return stats_from_degrees(d); },
        py::arg("degrees"));
  m.def("stats_from_graph", &stats_from_graph, py::arg("graph"));
  m.def("ff_total_adjacency", &ff_total_adjacency, py::arg("graph"));
  m.def("kff_from_histogram", &kff_from_histogram, py::arg("hist"));
  m.def("components", &components, py::arg("graph"));
  m.def("global_efficiency", &global_efficiency, py::arg("graph"),
        py::call_guard<py::gil_scoped_release>());
  m.def("central_point_dominance", &central_point_dominance, py::arg("graph"),
        py::call_guard<py::gil_scoped_release>());

  m.def("fit_alpha", [](const std::vector<double>& xs, std::optional<double> k_min,
                        std::optional<double> k_max) {
    if (!k_min && !k_max) return fit_alpha(xs);
    if (xs.empty()) return fit_alpha(xs);
    const double lo = k_min.value_or(*std::min_element(xs.begin(), xs.end()));
    const double hi = k_max.value_or(*std::max_element(xs.begin(), xs.end()));
    return fit_alpha(xs, lo, hi);
  }, py::arg("observations"), py::arg("k_min") = py::none(), py::arg("k_max") = py::none());
  m.def("alpha_from_moment", &alpha_from_moment, py::arg("observed"), py::arg("which"),
        py::arg("k_min"), py::arg("k_max"));
}
