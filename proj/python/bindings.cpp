#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcover/certificate.hpp"
#include "mcover/constructions.hpp"
#include "mcover/dual.hpp"
#include "mcover/extractor.hpp"
#include "mcover/instance_io.hpp"
#include "mcover/search.hpp"

namespace py = pybind11;
using namespace mcover;

namespace {

using Refs = std::vector<std::pair<int, int>>;

Refs to_refs(const Cover& cover) {
  Refs out;
  for (const auto& r : cover.components) out.emplace_back(r.color, r.serial);
  return out;
}

HostKind host_kind(const std::string& name) {
  if (name == "complete") return HostKind::kComplete;
  if (name == "semicomplete") return HostKind::kSemicomplete;
  throw InputError("host must be 'complete' or 'semicomplete'");
}

// Python-side handle: a coloring plus its cached decomposition.
class PyColoring {
 public:
  explicit PyColoring(EdgeColoring c) : coloring_(std::move(c)), d_(decompose(coloring_)) {}

  int r() const { return coloring_.structure().r(); }
  int ell() const { return coloring_.structure().ell(); }
  int k() const { return coloring_.num_colors(); }
  std::vector<std::size_t> class_sizes() const {
    const auto s = coloring_.structure().class_sizes();
    return {s.begin(), s.end()};
  }
  std::size_t vertex_count() const { return coloring_.structure().vertex_count(); }
  std::uint64_t edge_count() const { return coloring_.host().edge_count(); }
  int color_of(std::vector<Vertex> edge) const {
    std::sort(edge.begin(), edge.end());
    return coloring_.color_of(edge);
  }
  bool is_spanning() const { return mcover::is_spanning(coloring_, d_).spanning; }
  std::vector<std::vector<std::vector<Vertex>>> components() const {
    std::vector<std::vector<std::vector<Vertex>>> out(d_.num_colors());
    for (Color c = 1; c <= d_.num_colors(); ++c) {
      for (const auto& comp : d_.components_of(c)) {
        std::vector<Vertex> vs;
        for (auto v = comp.vertices.find_first(); v != VertexSet::npos; v = comp.vertices.find_next(v)) {
          vs.push_back(static_cast<Vertex>(v));
        }
        out[c - 1].push_back(std::move(vs));
      }
    }
    return out;
  }
  std::vector<int> vertex_vector(Vertex v) const {
    if (v >= d_.vertex_count()) throw InputError("vertex out of range");
    return d_.vertex_vector(v);
  }
  std::pair<int, Refs> min_cover_exact(std::size_t component_limit) const {
    const auto e = mcover::min_cover_exact(d_, SolverOptions{component_limit});
    return {e.size, to_refs(e.cover)};
  }
  std::pair<int, Refs> min_cover_greedy() const {
    const auto g = mcover::min_cover_greedy(d_);
    return {g.size, to_refs(g.cover)};
  }
  bool no_cover_of_size(int m) const { return mcover::no_cover_of_size(d_, m).none_cover; }
  py::dict constructive_cover() const {
    const auto cc = extract_cover_constructive(coloring_);
    py::dict out;
    out["cover"] = to_refs(cc.cover);
    out["bound"] = cc.bound;
    out["trace"] = describe(cc.trace);
    return out;
  }
  py::dict dual(bool allow_nonspanning) const {
    const auto di = build_dual(coloring_, d_, DualOptions{allow_nonspanning});
    py::dict out;
    out["vertices"] = di.vertices.size();
    out["edges"] = di.edges;
    out["tau"] = tau(di).size;
    if (coloring_.structure().ell() == 1) out["r_wise_intersection"] = verify_r_wise_intersection(di).holds;
    return out;
  }
  std::string instance_text(bool force_explicit) const {
    return write_instance(coloring_, is_spanning(), force_explicit);
  }

 private:
  EdgeColoring coloring_;
  ComponentDecomposition d_;
};

}  // namespace

PYBIND11_MODULE(_mcover, m) {
  m.doc() = "Monochromatic component covers of edge-colored partite hypergraphs";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<AnomalyError>(m, "AnomalyError", PyExc_RuntimeError);
  (void)input_error;

  py::class_<PyColoring>(m, "Coloring")
      .def_property_readonly("r", &PyColoring::r)
      .def_property_readonly("ell", &PyColoring::ell)
      .def_property_readonly("k", &PyColoring::k)
      .def_property_readonly("class_sizes", &PyColoring::class_sizes)
      .def_property_readonly("vertex_count", &PyColoring::vertex_count)
      .def_property_readonly("edge_count", &PyColoring::edge_count)
      .def("color_of", &PyColoring::color_of, py::arg("edge"))
      .def("is_spanning", &PyColoring::is_spanning)
      .def("components", &PyColoring::components, "Vertex lists per color, ordered by serial")
      .def("vertex_vector", &PyColoring::vertex_vector, py::arg("v"))
      .def("min_cover_exact", &PyColoring::min_cover_exact, py::arg("component_limit") = 64,
           "(size, [(color, serial), ...])")
      .def("min_cover_greedy", &PyColoring::min_cover_greedy)
      .def("no_cover_of_size", &PyColoring::no_cover_of_size, py::arg("m"))
      .def("constructive_cover", &PyColoring::constructive_cover)
      .def("dual", &PyColoring::dual, py::arg("allow_nonspanning") = false)
      .def("instance_text", &PyColoring::instance_text, py::arg("explicit") = false);

  m.def("build_basic", [](int r, int t) { return PyColoring(build_basic(r, t)); }, py::arg("r"), py::arg("t"));
  m.def(
      "build_general",
      [](int r, int ell, int k, const std::string& host) {
        return PyColoring(build_general(r, ell, k, host_kind(host)));
      },
      py::arg("r"), py::arg("ell"), py::arg("k"), py::arg("host") = "complete");
  m.def(
      "build_nonspanning_sharp",
      [](int r, int k, std::vector<std::size_t> sizes) {
        return PyColoring(build_nonspanning_sharp(r, k, std::move(sizes)));
      },
      py::arg("r"), py::arg("k"), py::arg("class_sizes"));
  m.def(
      "random_spanning_coloring",
      [](int r, int ell, std::vector<std::size_t> sizes, int k, std::uint64_t seed, const std::string& host) {
        return PyColoring(random_spanning_coloring(PartiteStructure(r, ell, std::move(sizes)), k, seed, 200'000,
                                                   host_kind(host)));
      },
      py::arg("r"), py::arg("ell"), py::arg("class_sizes"), py::arg("k"), py::arg("seed"),
      py::arg("host") = "complete");
  m.def(
      "parse_instance",
      [](const std::string& text) {
        auto file = mcover::parse_instance(text);
        if (!file.coloring) throw InputError("dual instances are not supported here");
        return PyColoring(std::move(*file.coloring));
      },
      py::arg("text"));
  m.def("instance_digest", [](const std::string& text) { return mcover::instance_digest(text); }, py::arg("text"));
  m.def("bound_formula", &bound_formula, py::arg("r"), py::arg("ell"), py::arg("k"));
  m.def("proved_upper_bound", &proved_upper_bound, py::arg("r"), py::arg("ell"), py::arg("k"));
  m.def(
      "verify_certificate",
      [](const std::string& instance, const std::string& certificate) {
        const auto v = mcover::verify_certificate(instance, certificate);
        return std::make_pair(v.valid, v.reason);
      },
      py::arg("instance_text"), py::arg("certificate_text"));
  m.def(
      "run_search",
      [](const std::string& config_json) {
        const SearchConfig cfg = parse_search_config(config_json);
        py::gil_scoped_release release;
        return run_search(cfg).to_json();
      },
      py::arg("config_json"), "Runs a search config (JSON text) and returns the report JSON");
}
