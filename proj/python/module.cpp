#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "semiglue/cli.hpp"
#include "semiglue/errors.hpp"
#include "semiglue/resolution.hpp"
#include "semiglue/toric.hpp"
#include "semiglue/verdicts.hpp"

namespace py = pybind11;
using namespace semiglue;

namespace {

AffineSemigroup affine(const std::vector<std::vector<Int>>& gens) {
  std::vector<NatVector> v;
  for (const auto& g : gens) v.emplace_back(g);
  return AffineSemigroup(std::move(v));
}

std::vector<std::vector<Int>> entries(const std::vector<NatVector>& v) {
  std::vector<std::vector<Int>> out;
  for (const auto& x : v) out.push_back(x.entries());
  return out;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["property"] = v.property;
  d["result"] = v.result;
  d["method"] = v.method;
  d["witness"] = v.witness;
  d["conflict"] = v.conflict();
  return d;
}

}  // namespace

PYBIND11_MODULE(_semiglue, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ArithmeticError);

  m.def("frobenius", [](std::vector<Int> g) { return frobenius(NumericalSemigroup(std::move(g))); });
  m.def("gaps", [](std::vector<Int> g) { return gaps(NumericalSemigroup(std::move(g))); });
  m.def("pseudo_frobenius", [](std::vector<Int> g) { return pf_numeric(NumericalSemigroup(std::move(g))); });
  m.def("contains", [](std::vector<Int> g, Int x) { return membership_num(NumericalSemigroup(std::move(g)), x); });
  m.def("hilbert_function", [](std::vector<Int> g, Int upto) { return hilbert_gr(NumericalSemigroup(std::move(g)), upto); });

  // Reduced degrevlex basis as (lead exponents, tail exponents) pairs.
  m.def("toric_ideal", [](const std::vector<std::vector<Int>>& gens) {
    std::vector<std::pair<std::vector<Int>, std::vector<Int>>> out;
    for (const auto& b : toric_ideal(affine(gens)).generators) {
      std::vector<Int> l, t;
      for (std::size_t i = 0; i < b.nvars(); ++i) l.push_back(b.lead()[i]), t.push_back(b.tail()[i]);
      out.emplace_back(l, t);
    }
    return out;
  });
  m.def("betti_table", [](const std::vector<std::vector<Int>>& gens) {
    auto t = betti_degrees(affine(gens));
    std::vector<std::vector<std::vector<Int>>> rows;
    for (std::size_t i = 0; i < t.rows.size(); ++i) rows.push_back(entries(t.degrees(i)));
    return rows;
  });
  m.def("pseudo_frobenius_affine", [](const std::vector<std::vector<Int>>& gens) {
    auto s = affine(gens);
    return entries(pf_via_betti(s, betti_degrees(s)));
  });

  m.def("acm_projective_closure", [](std::vector<Int> g) { return verdict_dict(acm_projective_closure(NumericalSemigroup(std::move(g)))); });
  m.def("cm_tangent_cone", [](std::vector<Int> g) { return verdict_dict(cm_tangent_cone(NumericalSemigroup(std::move(g)))); });
  m.def("gorenstein_projective_closure",
        [](std::vector<Int> g) { return verdict_dict(gorenstein_projective_closure(NumericalSemigroup(std::move(g)))); });

  // Runs the command-line tool in process: returns (exit code, stdout, stderr).
  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
  m.attr("schema_version") = cli::kSchemaVersion;
}
