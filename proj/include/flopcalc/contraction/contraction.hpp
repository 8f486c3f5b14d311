#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flopcalc/ncgb/groebner.hpp"

namespace flopcalc::contraction {

using pathalg::AlgebraPresentation;
using pathalg::VertexId;

/// A/Ae0A: vertex e0 and its arrows removed, paths through e0 set to zero.
AlgebraPresentation contraction_presentation(const AlgebraPresentation& alg, VertexId e0);

/// Adds the commutators of every pair of loops at a common vertex.
AlgebraPresentation abelianization(const AlgebraPresentation& alg);

struct LocalDimension {
  std::size_t global = 0;
  /// dim A/J^N for the stable power J^N = J^(N+1) of the arrow ideal: the part supported at the origin.
  std::size_t local = 0;
  int stable_power = 0;
};

/// Requires a finite-dimensional quotient; throws BudgetExceeded otherwise.
LocalDimension local_dimension(const AlgebraPresentation& alg, std::uint64_t budget = ncgb::default_budget());

struct ContractionDims {
  std::size_t dim = 0;     ///< local
  std::size_t dim_ab = 0;  ///< local
  std::size_t global_dim = 0;
  std::size_t global_dim_ab = 0;
};

ContractionDims contraction_dims(const AlgebraPresentation& alg, VertexId e0,
                                 std::uint64_t budget = ncgb::default_budget());

using GvTuple = std::array<std::size_t, 6>;

/// All (n1..n6) with n1 = dim_ab and sum n_i i^2 = dim; with a length, n_length > 0 and n_i = 0 beyond it.
std::vector<GvTuple> gv_invariants(std::size_t dim, std::size_t dim_ab, std::optional<int> length = std::nullopt);

struct ContractionReport {
  AlgebraPresentation presentation;
  ContractionDims dims;
  std::vector<GvTuple> gv_solutions;
  std::optional<int> declared_length;
};

ContractionReport contraction_report(const AlgebraPresentation& alg, VertexId e0, std::optional<int> length = std::nullopt,
                                     std::uint64_t budget = ncgb::default_budget());

}  // namespace flopcalc::contraction
