#include "flopcalc/contraction/contraction.hpp"

#include <functional>

#include "flopcalc/errors.hpp"
#include "flopcalc/pathalg/linear_span.hpp"

namespace flopcalc::contraction {

using pathalg::Element;

AlgebraPresentation contraction_presentation(const AlgebraPresentation& alg, VertexId e0) {
  const auto& q = alg.quiver();
  if (!q.has_vertex(e0)) throw DomainError("no vertex " + std::to_string(e0));
  std::vector<VertexId> vertices;
  for (auto v : q.vertices())
    if (v != e0) vertices.push_back(v);
  std::vector<pathalg::Arrow> arrows;
  for (const auto& a : q.arrows())
    if (a.source != e0 && a.target != e0) arrows.push_back(a);
  std::vector<std::string> precedence;
  for (const auto& n : alg.order().precedence_names(q))
    if (std::any_of(arrows.begin(), arrows.end(), [&](const pathalg::Arrow& a) { return a.name == n; }))
      precedence.push_back(n);
  auto ctx = pathalg::make_context(pathalg::Quiver(vertices, arrows), alg.params(), precedence);
  AlgebraPresentation out{ctx, {}, alg.name.empty() ? "" : alg.name + "-con"};
  for (const auto& r : alg.relations) {
    auto x = pathalg::map_element(r, ctx);
    if (!x.is_zero()) out.relations.push_back(std::move(x));
  }
  return out;
}

AlgebraPresentation abelianization(const AlgebraPresentation& alg) {
  AlgebraPresentation out = alg;
  const auto& q = alg.quiver();
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    for (std::size_t j = i + 1; j < q.arrow_count(); ++j) {
      const auto &a = q.arrow(i), &b = q.arrow(j);
      if (a.source != a.target || b.source != b.target || a.source != b.source) continue;
      auto x = Element::arrow(alg.context, a.name), y = Element::arrow(alg.context, b.name);
      out.relations.push_back(x * y - y * x);
    }
  }
  if (!out.name.empty()) out.name += "-ab";
  return out;
}

LocalDimension local_dimension(const AlgebraPresentation& alg, std::uint64_t budget) {
  auto gb = ncgb::complete_groebner(alg, alg.order(), budget);
  if (!ncgb::finite_normal_words(gb)) throw DomainError("quotient is infinite-dimensional");
  auto words = ncgb::enumerate_normal_words(gb);
  LocalDimension r;
  r.global = words.size();
  std::vector<Element> arrows;
  for (const auto& a : alg.quiver().arrows()) arrows.push_back(Element::arrow(alg.context, a.name));
  // J^k as a span; J^(k+1) = J^k * arrows
  pathalg::LinearSpan power(alg.order());
  for (const auto& w : words) power.insert(Element::path(alg.context, w));
  for (int k = 0;; ++k) {
    pathalg::LinearSpan next(alg.order());
    for (const auto& v : power.basis())
      for (const auto& x : arrows) {
        auto y = v * x;
        if (!y.is_zero()) next.insert(gb.normal_form(y));
      }
    if (next.dimension() == power.dimension()) {
      r.local = r.global - power.dimension();
      r.stable_power = k;
      return r;
    }
    power = std::move(next);
  }
}

ContractionDims contraction_dims(const AlgebraPresentation& alg, VertexId e0, std::uint64_t budget) {
  auto con = contraction_presentation(alg, e0);
  auto full = local_dimension(con, budget);
  auto ab = local_dimension(abelianization(con), budget);
  return {full.local, ab.local, full.global, ab.global};
}

std::vector<GvTuple> gv_invariants(std::size_t dim, std::size_t dim_ab, std::optional<int> length) {
  std::vector<GvTuple> out;
  if (dim_ab > dim) return out;
  if (length && (*length < 1 || *length > 6)) throw DomainError("length must be between 1 and 6");
  int top = length.value_or(6);
  GvTuple n{};
  n[0] = dim_ab;
  std::function<void(int, std::size_t)> rec = [&](int i, std::size_t rest) {
    if (i > top) {
      if (rest == 0 && (!length || n[std::size_t(top - 1)] > 0)) out.push_back(n);
      return;
    }
    std::size_t sq = std::size_t(i * i);
    for (std::size_t k = 0; k * sq <= rest; ++k) {
      n[std::size_t(i - 1)] = k;
      rec(i + 1, rest - k * sq);
    }
    n[std::size_t(i - 1)] = 0;
  };
  if (top == 1) {
    if (dim == dim_ab && dim_ab > 0) out.push_back(n);
    return out;
  }
  rec(2, dim - dim_ab);
  return out;
}

ContractionReport contraction_report(const AlgebraPresentation& alg, VertexId e0, std::optional<int> length,
                                     std::uint64_t budget) {
  ContractionReport r;
  r.presentation = contraction_presentation(alg, e0);
  r.dims = contraction_dims(alg, e0, budget);
  r.gv_solutions = gv_invariants(r.dims.dim, r.dims.dim_ab, length);
  r.declared_length = length;
  return r;
}

}  // namespace flopcalc::contraction
