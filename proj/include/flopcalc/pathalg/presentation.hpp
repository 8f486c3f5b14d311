#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flopcalc/pathalg/element.hpp"

namespace flopcalc::pathalg {

struct AlgebraPresentation {
  ContextPtr context;
  std::vector<Element> relations;
  std::string name;

  const Quiver& quiver() const { return context->quiver; }
  const ParamRing& params() const { return context->params; }
  const MonomialOrder& order() const { return context->display_order; }
  /// Largest relation degree under the display order.
  int max_relation_degree() const;
};

/// Builds a context; precedence lists arrow names highest first (default: declaration order).
ContextPtr make_context(Quiver q, ParamRing params, const std::vector<std::string>& precedence = {});

/// Parses an element written in the presentation syntax against an existing algebra.
Element parse_element(std::string_view text, const ContextPtr& ctx, std::size_t line = 1, std::size_t column = 1);

AlgebraPresentation parse_presentation(std::string_view text);
std::string print_presentation(const AlgebraPresentation& alg);

/// Throws DomainError unless every relation has a single (source, target).
void validate(const AlgebraPresentation& alg);

bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Algebra map into `target`: arrows go to their images (same-named arrow when unlisted), e_v to e_v,
/// coefficients through the parameter substitution (same-named parameter when unlisted).
Element map_element(const Element& x, const ContextPtr& target, const std::map<std::string, Element>& arrows = {},
                    const std::map<std::string, MultiPoly>& params = {});

}  // namespace flopcalc::pathalg
