#pragma once

#include <string>
#include <vector>

#include "flopcalc/coeff/param_ring.hpp"
#include "flopcalc/pathalg/presentation.hpp"

namespace flopcalc::catalog {

using coeff::MultiPoly;
using coeff::ParamRing;
using coeff::Rational;
using pathalg::AlgebraPresentation;

enum class DynkinType { A1, D4, E6, E7, E8 };

/// Extended Dynkin diagram on vertices 0..n (0 extending). Edge i is the arrow a<i>: edges[i].first -> edges[i].second.
struct DynkinDiagram {
  DynkinType type;
  std::string name;
  std::vector<int> labels;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return int(labels.size()); }
  /// Number of edges joining i and j.
  int joined(int i, int j) const;
  /// Vertex whose t is eliminated by the linear relation: largest label, last on ties.
  int eliminated_vertex() const;
};

const DynkinDiagram& dynkin(DynkinType type);
DynkinType dynkin_type(const std::string& name);

struct Coloring {
  DynkinType diagram;
  int black;
};

/// Q[t0..tn], every t_i of degree 2.
ParamRing weyl_ring(const DynkinDiagram& d);

/// s_i on Q[t0..tn]; i must be a non-extending vertex.
MultiPoly apply_simple_reflection(const DynkinDiagram& d, int i, const MultiPoly& p);

AlgebraPresentation preprojective(const DynkinDiagram& d);
/// Relations sum [a,a*] = t_v e_v, with t_c for c = eliminated_vertex() solved from sum w_i t_i = 0.
AlgebraPresentation deformed_preprojective(const DynkinDiagram& d);
/// The eliminated t_c written in the remaining t_i.
MultiPoly eliminated_parameter(const DynkinDiagram& d, const ParamRing& ring);

}  // namespace flopcalc::catalog
