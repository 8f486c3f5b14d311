#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flopcalc/catalog/catalog.hpp"
#include "flopcalc/coeff/ideal.hpp"
#include "flopcalc/flops/pipeline.hpp"

namespace flopcalc::flops {

/// Matrices over ring / ideal, one per arrow; row-vector convention, so rep(pq) = rep(p) rep(q).
struct Representation {
  ParamRing ring;
  std::vector<MultiPoly> ideal;
  std::map<pathalg::VertexId, std::size_t> dims;
  std::map<std::string, Matrix> arrows;
  /// Algebra parameter -> ring element; unlisted parameters map to the same-named ring variable.
  std::map<std::string, MultiPoly> params;
};

/// Format:
///   ring: c00, c10, t
///   ideal: p1 ; p2
///   params: T0b = -u ; ...
///   dims: 0 = 1, 4 = 2
///   a = [1, 0]
///   b = [0, 1 ; u, 0]
Representation parse_representation(std::string_view text);
std::string print_representation(const Representation& rep);

/// Length-2 moduli charts "U0", "U1" (over the length2 algebra).
std::vector<std::string> builtin_representation_names();
Representation builtin_representation(const std::string& name);

/// Value of an element on the representation, reduced modulo the ideal.
Matrix evaluate(const Element& x, const Representation& rep, const coeff::PolyIdeal& ideal);

/// Every relation evaluates to the zero matrix in ring / ideal.
catalog::Report verify_representation(const AlgebraPresentation& alg, const Representation& rep);

}  // namespace flopcalc::flops
