#pragma once

#include <map>
#include <memory>
#include <string>

#include "flopcalc/coeff/param_ring.hpp"
#include "flopcalc/pathalg/order.hpp"

namespace flopcalc::pathalg {

using coeff::MultiPoly;
using coeff::ParamRing;
using coeff::Rational;
using coeff::RatFunc;

/// Quiver plus coefficient ring; shared by every Element of one algebra.
struct AlgebraContext {
  Quiver quiver;
  ParamRing params;
  MonomialOrder display_order;

  AlgebraContext(Quiver q, ParamRing p, const std::vector<std::string>& precedence = {})
      : quiver(std::move(q)), params(std::move(p)), display_order(quiver, precedence) {}
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

bool same_algebra(const ContextPtr& a, const ContextPtr& b);

class Element {
 public:
  using Terms = std::map<Path, RatFunc>;

  Element() = default;
  explicit Element(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Element path(ContextPtr ctx, const Path& p, const RatFunc& c = RatFunc(1));
  static Element arrow(ContextPtr ctx, const std::string& name);
  static Element idempotent(ContextPtr ctx, VertexId v);
  /// c times the identity (sum of all idempotents).
  static Element scalar(ContextPtr ctx, const RatFunc& c);

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const Path& p) const;
  void add_term(const Path& p, const RatFunc& c);

  /// Largest path in the order, with its coefficient. Requires a nonzero element.
  std::pair<Path, RatFunc> leading(const MonomialOrder& order) const;
  int degree(const MonomialOrder& order) const;
  /// Common (source, target) of all terms, if any.
  std::optional<std::pair<VertexId, VertexId>> endpoints() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  Element scaled(const RatFunc& c) const;
  Element pow(unsigned e) const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  void check(const Element& o) const;
  ContextPtr ctx_;
  Terms terms_;
};

std::string to_string(const Element& e);
std::string to_string(const Element& e, const MonomialOrder& order);
/// Coefficient in the textual style used by element printing, without the path.
std::string coefficient_string(const RatFunc& c, const ParamRing& ring);

}  // namespace flopcalc::pathalg
