#pragma once

#include <map>
#include <string>
#include <vector>

#include "flopcalc/catalog/dynkin.hpp"

namespace flopcalc::catalog {

using pathalg::Element;

struct TauFamily {
  std::string name;
  std::vector<MultiPoly> roots;  ///< over weyl_ring
};

/// A generator of H_l as an element of Q[t0..tn]: either a linear form or scale * sigma_k(family).
struct InvariantGenerator {
  std::string name;
  std::string family;  ///< empty for a linear form
  std::size_t k = 0;
  Rational scale = 1;
  MultiPoly linear;
};

struct InvariantData {
  Coloring coloring;
  std::vector<int> reflections;  ///< W_C generators
  std::vector<TauFamily> families;
  std::vector<InvariantGenerator> generators;

  const TauFamily& family(const std::string& name) const;
  MultiPoly value(const InvariantGenerator& g) const;
};

struct FlopCatalogEntry {
  int length = 0;
  AlgebraPresentation presentation;
  /// x', y, z of the hypersurface (length 1 uses x' = (a0 a1 + a1* a0*)/2 and y = (a0 a1 - a1* a0*)/2).
  Element xprime, y, z;
  std::vector<Element> module_generators;
  /// Central-fibre equation in its classical variables x, y, z.
  std::string central_equation;
  /// Hypersurface variables written in the table variables (identity when empty).
  std::map<std::string, std::string> table_variables;
  AlgebraPresentation central_fibre;
  /// Images of the universal arrows in the central-fibre algebra (unlisted arrows keep their name).
  std::map<std::string, std::string> central_map;
  InvariantData invariants;
  /// Truncation degree for the hypersurface and MF pipeline.
  int gb_degree = 0;
};

/// l in 1..6.
const FlopCatalogEntry& universal_flopping_algebra(int l);

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;
  bool ok() const;
};

/// Every generator fixed by every W_C reflection; every tau family permuted by every W_C reflection;
/// generator degrees agree with the parameter degrees of the presentation.
Report verify_invariants(const FlopCatalogEntry& e);

/// Named presentations: universal algebras, central fibres, preprojective algebras and explicit examples.
std::vector<std::string> builtin_names();
AlgebraPresentation builtin(const std::string& name);

/// Base change H_l -> target ring.
struct ClassifyingMap {
  std::string name;
  int length = 0;
  ParamRing target;
  std::map<std::string, MultiPoly> images;
};
std::vector<std::string> classifying_map_names();
const ClassifyingMap& classifying_map(const std::string& name);

struct SuperpotentialData {
  std::string algebra;  ///< builtin name
  std::string phi;
  /// Arrow rescaling under which the cyclic derivatives match the relations (empty if none needed).
  std::map<std::string, Rational> rescaling;
};
std::vector<std::string> superpotential_names();
const SuperpotentialData& superpotential(const std::string& name);

}  // namespace flopcalc::catalog
