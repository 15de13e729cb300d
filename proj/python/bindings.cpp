#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dcjmedian/colored_graph.hpp"
#include "dcjmedian/distance.hpp"
#include "dcjmedian/errors.hpp"
#include "dcjmedian/genome.hpp"
#include "dcjmedian/instance_gen.hpp"
#include "dcjmedian/median_deg3.hpp"
#include "dcjmedian/oracle.hpp"

namespace py = pybind11;
using namespace dcjmedian;

namespace {

GenomeShape shape_from(const std::string& s) {
  if (s == "circular") return GenomeShape::circular;
  if (s == "linear") return GenomeShape::linear;
  if (s == "mixed") return GenomeShape::mixed;
  throw std::invalid_argument("shape must be circular, linear or mixed");
}

SizeLimit limit_from(const py::object& o) {
  if (o.is_none()) return SizeLimit::infinite();
  return SizeLimit::of(o.cast<int>());
}

py::list chromosome_list(const Genome& g) {
  py::list out;
  for (const auto& c : g.chromosomes())
    out.append(py::make_tuple(c.shape == ChromosomeShape::circular ? "C" : "L", c.genes));
  return out;
}

py::dict result_dict(const MedianResult& r) {
  py::dict d;
  d["genome"] = r.genome;
  d["cycles_total"] = r.cyc_total;
  d["cycles_per_color"] = r.cyc_per_color;
  d["cost"] = r.cost;
  d["exact"] = r.exact;
  d["lower_bound"] = r.lower_bound;
  d["upper_bound"] = r.upper_bound;
  d["deg3"] = r.degree3;
  d["max_pairs"] = r.max_pairs;
  d["edges_removed"] = r.edges_removed;
  d["configurations"] = r.configurations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact DCJ circular median of three genomes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidInstance>(m, "InvalidInstance", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Genome>(m, "Genome")
      .def_property_readonly("name", &Genome::name)
      .def_property_readonly("gene_count", &Genome::gene_count)
      .def_property_readonly("shape", [](const Genome& g) { return std::string(to_string(g.shape())); })
      .def("adjacencies",
           [](const Genome& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& p : g.adjacencies()) out.emplace_back(p.a, p.b);
             return out;
           })
      .def("chromosomes", &chromosome_list, "List of (kind, signed genes) with kind 'C' or 'L'.")
      .def("__eq__", [](const Genome& a, const Genome& b) { return a == b; })
      .def("__str__", &serialize_genome)
      .def("__repr__", [](const Genome& g) {
        return "<Genome " + g.name() + " n=" + std::to_string(g.gene_count()) + ">";
      });

  m.def("parse_instance", py::overload_cast<std::string_view>(&parse_instance), py::arg("text"),
        "Parse instance text into a list of genomes.");
  m.def(
      "serialize_instance",
      [](const std::vector<Genome>& genomes, const std::string& comment) {
        return serialize_instance(genomes, comment);
      },
      py::arg("genomes"), py::arg("comment") = "");

  m.def(
      "dcj_distance", [](const Genome& a, const Genome& b) { return dcj_distance(a, b).as_double(); },
      py::arg("a"), py::arg("b"));
  m.def(
      "bp_distance", [](const Genome& a, const Genome& b) { return bp_distance(a, b).as_double(); },
      py::arg("a"), py::arg("b"));
  m.def(
      "dij_distance",
      [](const Genome& a, const Genome& b, const py::object& i, const py::object& j) {
        return dij_distance(a, b, limit_from(i), limit_from(j)).as_double();
      },
      py::arg("a"), py::arg("b"), py::arg("i") = py::none(), py::arg("j") = py::none(),
      "None stands for an unbounded size limit.");

  m.def(
      "solve_median",
      [](const std::vector<Genome>& genomes, std::optional<int> max_pairs, bool assume_l, int jobs) {
        MedianResult r;
        {
          py::gil_scoped_release release;
          r = solve_median(genomes, {max_pairs, assume_l, jobs});
        }
        return result_dict(r);
      },
      py::arg("genomes"), py::arg("max_pairs") = py::none(), py::arg("assume_l") = false, py::arg("jobs") = 1);
  m.def(
      "median_with_bounds",
      [](const std::vector<Genome>& genomes, int max_deg3, int jobs) {
        MedianResult r;
        {
          py::gil_scoped_release release;
          r = median_with_bounds(genomes, max_deg3, {std::nullopt, false, jobs});
        }
        return result_dict(r);
      },
      py::arg("genomes"), py::arg("max_deg3"), py::arg("jobs") = 1);
  m.def(
      "exhaustive_cycles",
      [](const std::vector<Genome>& genomes) { return exhaustive_median(build_breakpoint_graph(genomes)).cyc; },
      py::arg("genomes"), "Best cycle total by brute force (at most 7 genes).");

  m.def(
      "generate",
      [](int n, int genomes, const std::string& shape, double telomere_prob, std::uint64_t seed) {
        return generate({n, genomes, shape_from(shape), telomere_prob, seed});
      },
      py::arg("n"), py::arg("genomes") = 3, py::arg("shape") = "circular", py::arg("telomere_prob") = 0.0,
      py::arg("seed") = 0);
  m.def("generate_bounded_degree", &generate_bounded_degree, py::arg("n"), py::arg("deg3"), py::arg("seed") = 0,
        py::arg("extra_telomere_prob") = 0.0);
}
