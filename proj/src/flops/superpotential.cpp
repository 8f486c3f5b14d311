#include "flopcalc/flops/superpotential.hpp"

#include "flopcalc/errors.hpp"
#include "flopcalc/ncgb/groebner.hpp"

namespace flopcalc::flops {

using pathalg::Path;

Element cyclic_derivative(const Element& w, const std::string& arrow) {
  const auto& q = w.context()->quiver;
  auto idx = q.arrow_index(arrow);
  if (!idx) throw DomainError("no arrow '" + arrow + "'");
  const auto& a = q.arrow(*idx);
  Element out(w.context());
  for (const auto& [p, c] : w.terms()) {
    if (p.is_idempotent() || p.source != p.target)
      throw DomainError("term " + pathalg::path_string(q, p) + " is not a cyclic word");
    for (std::size_t k = 0; k < p.length(); ++k) {
      if (p.letter(k) != *idx) continue;
      Path r{a.target, a.source, p.word.substr(k + 1) + p.word.substr(0, k)};
      out.add_term(r, c);
    }
  }
  return out;
}

Element rescale(const Element& phi, const std::map<std::string, Rational>& scale) {
  std::map<std::string, Element> arrows;
  for (const auto& [name, k] : scale) arrows[name] = Element::arrow(phi.context(), name).scaled(coeff::RatFunc(k));
  return pathalg::map_element(phi, phi.context(), arrows);
}

Report verify_superpotential(const AlgebraPresentation& alg, const Element& phi, int degree) {
  const auto& q = alg.quiver();
  const auto& ord = alg.order();
  AlgebraPresentation derived{alg.context, {}, "derivatives"};
  std::vector<std::string> names;
  for (const auto& a : q.arrows()) {
    auto d = cyclic_derivative(phi, a.name);
    names.push_back(a.name);
    derived.relations.push_back(d);
  }
  int top = degree;
  if (top <= 0) {
    for (const auto& r : alg.relations) top = std::max(top, r.degree(ord));
    for (const auto& r : derived.relations)
      if (!r.is_zero()) top = std::max(top, r.degree(ord));
    top += 2;
  }
  Report rep;
  auto gb = ncgb::truncated_groebner(alg, ord, top);
  for (std::size_t i = 0; i < names.size(); ++i) {
    bool ok = derived.relations[i].is_zero() || ncgb::normal_form(derived.relations[i], gb).is_zero();
    rep.lines.push_back({"d" + names[i] + " in relation ideal", ok, ok ? "" : pathalg::to_string(derived.relations[i])});
  }
  AlgebraPresentation nonzero{alg.context, {}, "derivatives"};
  for (const auto& r : derived.relations)
    if (!r.is_zero()) nonzero.relations.push_back(r);
  auto dgb = ncgb::truncated_groebner(nonzero, ord, top);
  for (std::size_t i = 0; i < alg.relations.size(); ++i) {
    bool ok = ncgb::normal_form(alg.relations[i], dgb).is_zero();
    rep.lines.push_back({"relation " + std::to_string(i + 1) + " in derivative ideal", ok,
                         ok ? "" : pathalg::to_string(alg.relations[i])});
  }
  return rep;
}

}  // namespace flopcalc::flops
