#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqspace/errors.hpp"
#include "seqspace/json_io.hpp"
#include "seqspace/rearrangement.hpp"

namespace py = pybind11;
using namespace seqspace;

namespace {

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(py::str(j.dump()));
}

Json py_to_json(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return Json::parse(obj.cast<std::string>());
  const py::object dumped = py::module_::import("json").attr("dumps")(obj);
  return Json::parse(dumped.cast<std::string>());
}

FiniteVector vector_from_py(const py::object& obj) {
  if (py::isinstance<py::dict>(obj)) return vector_from_json(py_to_json(obj));
  std::vector<VectorEntry> entries;
  for (const auto& item : obj.cast<py::sequence>()) {
    const auto pair = item.cast<py::sequence>();
    entries.push_back({pair[0].cast<std::size_t>(), pair[1].cast<double>()});
  }
  return FiniteVector(std::move(entries));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "norms, greedy approximation and democracy functions in Orlicz, "
            "Nakano, Lorentz and Marcinkiewicz sequence spaces";

  py::register_exception<DescriptorError>(m, "DescriptorError");
  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<ShapeError>(m, "ShapeError");

  py::class_<OrliczFunction>(m, "OrliczFunction")
      .def_static("power", &OrliczFunction::power, py::arg("p"))
      .def_static("fpa", &OrliczFunction::fpa, py::arg("p"), py::arg("a"))
      .def_static("dual_g", &OrliczFunction::dual_g)
      .def_static("from_json",
                  [](const py::object& j) { return orlicz_from_json(py_to_json(j)); })
      .def("__call__", [](const OrliczFunction& f, double t) { return f(t); })
      .def("to_json", [](const OrliczFunction& f) { return json_to_py(orlicz_to_json(f)); });

  m.def("flow", [](const OrliczFunction& f, double s) { return flow(f, s); },
        py::arg("f"), py::arg("s"));
  m.def("delta2_estimate", &delta2_estimate, py::arg("f"), py::arg("a"),
        py::arg("grid_size") = 512);
  m.def("multiplicative_convexity_violation", &multiplicative_convexity_violation,
        py::arg("f"), py::arg("grid_size") = 512);
  m.def("fundamental_function", &fundamental_function, py::arg("f"), py::arg("n"));

  py::class_<SpaceDescriptor>(m, "SpaceDescriptor")
      .def_static("from_json",
                  [](const py::object& j) { return space_from_json(py_to_json(j)); })
      .def_property_readonly("symmetric", &SpaceDescriptor::symmetric)
      .def("to_json", [](const SpaceDescriptor& s) { return json_to_py(space_to_json(s)); });

  m.def("space_norm",
        [](const SpaceDescriptor& s, const py::object& x, double tol) {
          return space_norm(s, vector_from_py(x), tol);
        },
        py::arg("space"), py::arg("x"), py::arg("tol") = 1e-12);

  m.def("modular",
        [](const SpaceDescriptor& s, const py::object& x) {
          return modular(s.musielak(), vector_from_py(x));
        },
        py::arg("space"), py::arg("x"));

  m.def("greedy_step",
        [](const py::object& x, std::size_t n) {
          return json_to_py(greedy_report_to_json(greedy_step(vector_from_py(x), n)));
        },
        py::arg("x"), py::arg("n"));

  m.def("best_nterm_error",
        [](const SpaceDescriptor& s, const py::object& x, std::size_t n) {
          return best_nterm_error(s, vector_from_py(x), n);
        },
        py::arg("space"), py::arg("x"), py::arg("n"));

  m.def("greedy_ratio",
        [](const SpaceDescriptor& s, const py::object& x, std::size_t n) {
          return greedy_ratio(s, vector_from_py(x), n);
        },
        py::arg("space"), py::arg("x"), py::arg("n"));

  m.def("democracy_functions",
        [](const SpaceDescriptor& s, std::size_t n_max, std::size_t window) {
          return json_to_py(democracy_to_json(democracy_functions(s, n_max, window)));
        },
        py::arg("space"), py::arg("n_max"), py::arg("window"));

  m.def("nakano_space_verdict",
        [](const py::object& exponents) {
          return json_to_py(
              classification_to_json(nakano_space_verdict(exponents_from_json(py_to_json(exponents)))));
        },
        py::arg("exponents"));

  m.def("condition_c_check",
        [](const py::object& counts, double r, int k_max) {
          return json_to_py(verdict_to_json(condition_c_check(counts_from_json(py_to_json(counts)), r, k_max)));
        },
        py::arg("counts"), py::arg("R"), py::arg("k_max"));

  m.def("build_block_basis",
        [](const OrliczFunction& f, const std::vector<std::size_t>& lengths,
           std::size_t samples, std::uint64_t seed) {
          return json_to_py(block_basis_to_json(build_block_basis(f, lengths, samples, seed)));
        },
        py::arg("f"), py::arg("lengths"), py::arg("samples") = 100, py::arg("seed") = 0);

  m.def("decreasing_rearrangement",
        [](const py::object& x) { return decreasing_rearrangement(vector_from_py(x)); },
        py::arg("x"));

  m.def("bridge_check",
        [](const SpaceDescriptor& s, const py::object& x) {
          const auto report = bridge_check(s.musielak(), vector_from_py(x));
          py::dict d;
          d["modular"] = report.modular_value;
          d["norm"] = report.norm;
          d["sup_exponent"] = report.sup_exponent;
          d["pass"] = report.pass;
          return d;
        },
        py::arg("space"), py::arg("x"));

  m.def("holder_ratio",
        [](const py::object& exponents, const py::object& x, const py::object& y) {
          return holder_ratio(exponents_from_json(py_to_json(exponents)), vector_from_py(x),
                              vector_from_py(y));
        },
        py::arg("exponents"), py::arg("x"), py::arg("y"));

  m.def("weight_properties",
        [](const py::object& weight, std::size_t m_range) {
          return json_to_py(weight_properties_to_json(
              weight_properties(weight_from_json(py_to_json(weight)), m_range)));
        },
        py::arg("weight"), py::arg("m"));

  m.def("right_dominance_ratio",
        [](const SpaceDescriptor& s, std::size_t trials, std::uint64_t seed, std::size_t window) {
          return right_dominance_ratio(s, trials, seed, window);
        },
        py::arg("space"), py::arg("trials"), py::arg("seed") = 0, py::arg("window") = 64);
}
