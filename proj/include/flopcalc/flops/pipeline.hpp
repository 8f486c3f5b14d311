#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flopcalc/catalog/catalog.hpp"
#include "flopcalc/ncgb/groebner.hpp"

namespace flopcalc::flops {

using catalog::ClassifyingMap;
using catalog::FlopCatalogEntry;
using coeff::MultiPoly;
using coeff::ParamRing;
using coeff::RatFunc;
using pathalg::AlgebraPresentation;
using pathalg::Element;

/// Everything the pipeline needs from a catalog entry, possibly after a base change.
struct PipelineInput {
  AlgebraPresentation algebra;
  Element xprime, y, z;
  std::vector<Element> generators;
  int gb_degree = 0;
  /// Names for x, y, z in the output ring; must not clash with parameters.
  std::array<std::string, 3> names{"x", "y", "z"};
};

PipelineInput pipeline_input(const FlopCatalogEntry& e);

struct Hypersurface {
  ParamRing ring;  ///< x, y, z, then the parameters
  MultiPoly equation;  ///< f = x^2 - g
  MultiPoly g;
  MultiPoly P, Q;  ///< NF(x'^2) = P x' + Q, x = x' - P/2
};

struct MatrixFactorization {
  ParamRing ring;
  std::vector<std::vector<MultiPoly>> C;  ///< NF(x g_i) = sum_j C_ij g_j
  MultiPoly g;
  std::vector<Element> generators;
};

using Matrix = std::vector<std::vector<MultiPoly>>;

/// C^2 - g I; zero for a valid factorization.
Matrix mf_residual(const Matrix& C, const MultiPoly& g);
bool is_zero(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Holds the truncated basis so the hypersurface and MF share it.
class FlopPipeline {
 public:
  explicit FlopPipeline(PipelineInput input, std::uint64_t budget = ncgb::default_budget());

  const PipelineInput& input() const { return in_; }
  const ncgb::GroebnerBasis& groebner() const { return gb_; }
  const Hypersurface& hypersurface();
  MatrixFactorization matrix_factorization();
  /// A polynomial in the output ring as an element of e0 A e0 (x, y, z through their paths).
  Element to_element(const MultiPoly& p);

 private:
  Element nf(const Element& x) const;
  const Element& power(int var, unsigned e);
  MultiPoly from_coefficients(const std::vector<RatFunc>& k, const std::vector<coeff::Monomial>& monos,
                              const std::string& what) const;

  PipelineInput in_;
  ncgb::GroebnerBasis gb_;
  ParamRing ring_;
  std::optional<Hypersurface> hyp_;
  Element x_;
  std::map<std::pair<int, unsigned>, Element> powers_;
};

Hypersurface hypersurface(const FlopCatalogEntry& entry, int gb_degree);
MatrixFactorization matrix_factorization(const FlopCatalogEntry& entry, int gb_degree);

/// Relations pushed through a parameter map into a new coefficient ring.
AlgebraPresentation specialize(const AlgebraPresentation& alg, const ParamRing& target,
                               const std::map<std::string, MultiPoly>& map);
AlgebraPresentation specialize(const AlgebraPresentation& alg, const ClassifyingMap& map);
/// Output names switch to upper case when one of them is a target variable.
PipelineInput specialize(const PipelineInput& in, const ClassifyingMap& map);

/// Format:
///   name: laufer
///   length: 2
///   target: t, y (deg 4), z (deg 4)
///   T0b = -y
/// Unlisted parameters keep their name and must exist in the target.
ClassifyingMap parse_classifying_map(std::string_view text);
std::string print_classifying_map(const ClassifyingMap& map);

/// Declarative change of variables on the output ring (e.g. the length-2 nice basis).
struct BaseChange {
  ParamRing target;
  std::map<std::string, std::string> images;  ///< source name -> polynomial over target
};
/// The length-2 nice basis: u = -T0b, w = -T0c, v = -(y + z + T0b + T0c - T0d + t^2/4)/2.
BaseChange nice_basis();
MultiPoly apply(const BaseChange& bc, const MultiPoly& p, const ParamRing& from);
Matrix apply(const BaseChange& bc, const Matrix& m, const ParamRing& from);

}  // namespace flopcalc::flops
