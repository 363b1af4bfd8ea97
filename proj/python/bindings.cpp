// Python bindings: a thin layer over the group, solver and GF(p) routines.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mindeg/catalog.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/expr.hpp"
#include "mindeg/gfp.hpp"
#include "mindeg/lattice.hpp"
#include "mindeg/solver.hpp"
#include "mindeg/theorems.hpp"

namespace py = pybind11;
using namespace mindeg;

namespace {

py::dict solution_dict(SolveResult const &r)
{
  std::vector<std::vector<Element>> parts;
  for (auto const &h : r.witness.parts)
    parts.push_back(h.elements());
  py::dict d;
  d["mu"] = r.mu;
  d["witness"] = parts;
  d["nodes"] = r.nodes_explored;
  d["proven_optimal"] = r.proven_optimal;
  return d;
}

std::pair<std::uint64_t, std::uint64_t> as_pair(Fraction f) { return {f.num, f.den}; }

gfp::MatrixGFp matrix(gfp::Residue p, std::vector<std::vector<long long>> const &rows)
{
  return gfp::MatrixGFp::from_rows(p, rows);
}

} // namespace

PYBIND11_MODULE(_mindeg, m)
{
  m.doc() = "minimal faithful permutation degree of finite groups";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<InvalidActionError>(m, "InvalidActionError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  py::class_<FiniteGroup>(m, "Group")
    .def(py::init([](std::string const &expr, std::size_t order_cap) {
           return build(std::string_view(expr), order_cap);
         }),
         py::arg("expr"), py::arg("order_cap") = kDefaultOrderCap)
    .def_static("from_table", &FiniteGroup::from_multiplication_table, py::arg("table"),
                py::arg("label") = "table")
    .def_property_readonly("order", &FiniteGroup::order)
    .def_property_readonly("label", &FiniteGroup::label)
    .def_property_readonly("abelian", &FiniteGroup::is_abelian)
    .def("mul", &FiniteGroup::mul)
    .def("inv", &FiniteGroup::inv)
    .def("element_order", &FiniteGroup::element_order)
    .def("__len__", &FiniteGroup::order)
    .def("__repr__", [](FiniteGroup const &g) {
      return "<Group " + g.label() + " of order " + std::to_string(g.order()) + ">";
    });

  m.def("normalized_key", [](std::string const &e) { return normalized_key(parse_group_expr(e)); });

  m.def("mu", [](FiniteGroup const &g) { return solution_dict(mu_exact(g)); }, py::arg("group"));
  m.def("mu_oracle",
        [](FiniteGroup const &g, std::size_t cap) { return solution_dict(mu_oracle(g, cap)); },
        py::arg("group"), py::arg("oracle_cap") = kDefaultOracleCap);
  m.def("compression_ratio", [](FiniteGroup const &g) { return as_pair(compression_ratio(g)); });
  m.def("is_cs", [](FiniteGroup const &g) { return is_cs(g); });
  m.def("is_cse", [](FiniteGroup const &g) { return is_cse(g).member; });
  m.def("incompressible_type", [](FiniteGroup const &g) { return to_string(structural_type(g)); });
  m.def("primary_decomposition",
        [](FiniteGroup const &g) { return primary_decomposition(g).factors; });

  m.def("subgroups", [](FiniteGroup const &g) {
    auto lattice = SubgroupLattice::compute(g);
    std::vector<py::dict> out;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      py::dict d;
      d["elements"] = lattice.at(i).elements();
      d["normal"] = lattice.is_normal(i);
      d["meet_irreducible"] = lattice.is_meet_irreducible(i);
      out.push_back(d);
    }
    return out;
  });

  m.def("catalog", [](std::size_t max_order) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (auto const &e : catalog(max_order))
      out.emplace_back(e.name, e.order);
    return out;
  });

  m.def("det", [](gfp::Residue p, std::vector<std::vector<long long>> const &rows) {
    return gfp::det(matrix(p, rows));
  });
  m.def("det_laplace", [](gfp::Residue p, std::vector<std::vector<long long>> const &rows,
                          std::vector<std::size_t> const &cols) {
    return gfp::det_laplace(matrix(p, rows), cols);
  });
  m.def("rank", [](gfp::Residue p, std::vector<std::vector<long long>> const &rows) {
    return matrix(p, rows).rank();
  });
}
