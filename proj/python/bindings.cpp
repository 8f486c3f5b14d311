#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flopcalc/catalog/catalog.hpp"
#include "flopcalc/cli/run.hpp"
#include "flopcalc/coeff/text.hpp"
#include "flopcalc/contraction/contraction.hpp"
#include "flopcalc/errors.hpp"
#include "flopcalc/flops/pipeline.hpp"
#include "flopcalc/flops/representation.hpp"
#include "flopcalc/flops/superpotential.hpp"

namespace py = pybind11;
using namespace flopcalc;

namespace {

pathalg::AlgebraPresentation algebra(const std::string& text_or_name) {
  if (text_or_name.find(':') != std::string::npos) return pathalg::parse_presentation(text_or_name);
  return catalog::builtin(text_or_name);
}

flops::PipelineInput input(int length, const std::optional<std::string>& map) {
  auto in = flops::pipeline_input(catalog::universal_flopping_algebra(length));
  if (!map) return in;
  if (map->find(':') != std::string::npos) return flops::specialize(in, flops::parse_classifying_map(*map));
  return flops::specialize(in, catalog::classifying_map(*map));
}

py::list rows(const flops::Matrix& m, const coeff::ParamRing& r) {
  py::list out;
  for (const auto& row : m) {
    py::list l;
    for (const auto& x : row) l.append(coeff::to_string(x, r));
    out.append(l);
  }
  return out;
}

py::list report(const catalog::Report& rep) {
  py::list out;
  for (const auto& l : rep.lines) out.append(py::make_tuple(l.name, l.ok, l.detail));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "flopcalc core bindings";

  auto base = py::register_exception<Error>(m, "FlopcalcError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line tool in-process; returns (exit code, stdout, stderr).");

  m.def("builtin_names", &catalog::builtin_names);
  m.def("classifying_map_names", &catalog::classifying_map_names);
  m.def("presentation", [](const std::string& name) { return pathalg::print_presentation(algebra(name)); },
        py::arg("name_or_text"));

  m.def("normal_form", [](const std::string& alg_text, const std::string& element, std::optional<int> degree) {
    auto alg = algebra(alg_text);
    pathalg::validate(alg);
    auto x = pathalg::parse_element(element, alg.context);
    int d = degree.value_or(std::max(alg.max_relation_degree(), x.degree(alg.order())));
    auto gb = ncgb::truncated_groebner(alg, alg.order(), d);
    return pathalg::to_string(ncgb::normal_form(x, gb), alg.order());
  }, py::arg("algebra"), py::arg("element"), py::arg("degree") = py::none());

  m.def("dimension", [](const std::string& alg_text) {
    auto r = ncgb::dimension(algebra(alg_text));
    return r.finite ? py::object(py::int_(r.value)) : py::object(py::none());
  }, py::arg("algebra"));

  m.def("hypersurface", [](int length, std::optional<std::string> map, bool nice) {
    flops::FlopPipeline p(input(length, map));
    const auto& h = p.hypersurface();
    py::dict d;
    if (nice) {
      auto bc = flops::nice_basis();
      d["f"] = coeff::to_string(flops::apply(bc, h.equation, h.ring), bc.target);
      return d;
    }
    d["f"] = coeff::to_string(h.equation, h.ring);
    d["g"] = coeff::to_string(h.g, h.ring);
    d["P"] = coeff::to_string(h.P, h.ring);
    d["Q"] = coeff::to_string(h.Q, h.ring);
    return d;
  }, py::arg("length"), py::arg("map") = py::none(), py::arg("nice_basis") = false);

  m.def("matrix_factorization", [](int length, std::optional<std::string> map, bool nice) {
    flops::FlopPipeline p(input(length, map));
    auto mf = p.matrix_factorization();
    auto C = mf.C;
    auto g = mf.g;
    auto ring = mf.ring;
    if (nice) {
      auto bc = flops::nice_basis();
      C = flops::apply(bc, C, mf.ring);
      g = flops::apply(bc, g, mf.ring);
      ring = bc.target;
    }
    py::dict d;
    d["C"] = rows(C, ring);
    d["g"] = coeff::to_string(g, ring);
    d["ok"] = flops::is_zero(flops::mf_residual(C, g));
    return d;
  }, py::arg("length"), py::arg("map") = py::none(), py::arg("nice_basis") = false);

  m.def("contraction", [](const std::string& alg_text, std::optional<int> vertex, std::optional<int> length) {
    auto alg = algebra(alg_text);
    auto v = vertex ? pathalg::VertexId(*vertex) : alg.quiver().vertices().front();
    auto r = contraction::contraction_report(alg, v, length);
    py::dict d;
    d["presentation"] = pathalg::print_presentation(r.presentation);
    d["dim"] = r.dims.dim;
    d["dim_ab"] = r.dims.dim_ab;
    d["gv"] = r.gv_solutions;
    return d;
  }, py::arg("algebra"), py::arg("vertex") = py::none(), py::arg("length") = py::none());

  m.def("gv_invariants", &contraction::gv_invariants, py::arg("dim"), py::arg("dim_ab"),
        py::arg("length") = py::none());

  m.def("verify_superpotential", [](const std::string& alg_text, const std::string& phi) {
    auto alg = algebra(alg_text);
    return report(flops::verify_superpotential(alg, pathalg::parse_element(phi, alg.context)));
  }, py::arg("algebra"), py::arg("phi"));

  m.def("verify_representation", [](const std::string& alg_text, const std::string& rep) {
    auto r = rep.find(':') != std::string::npos ? flops::parse_representation(rep) : flops::builtin_representation(rep);
    return report(flops::verify_representation(algebra(alg_text), r));
  }, py::arg("algebra"), py::arg("representation"));
}
