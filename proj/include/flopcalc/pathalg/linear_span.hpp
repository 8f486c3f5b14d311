#pragma once

#include <map>
#include <optional>
#include <vector>

#include "flopcalc/pathalg/element.hpp"

namespace flopcalc::pathalg {

/// Reduced echelon basis of a subspace of a path algebra, keyed by leading path.
class LinearSpan {
 public:
  explicit LinearSpan(MonomialOrder order) : order_(std::move(order)) {}

  /// Adds x; false when x already lies in the span.
  bool insert(const Element& x);
  /// x minus its projection onto the span along the basis leads.
  Element reduce(const Element& x) const;
  bool contains(const Element& x) const { return reduce(x).is_zero(); }
  std::size_t dimension() const { return basis_.size(); }
  std::vector<Element> basis() const;

 private:
  MonomialOrder order_;
  std::map<Path, Element> basis_;
};

/// Coefficients k with target = sum k_i spanning_i, or nullopt outside the span.
/// Dependent members of the spanning list get coefficient zero.
std::optional<std::vector<RatFunc>> express(const Element& target, const std::vector<Element>& spanning,
                                            const MonomialOrder& order);

}  // namespace flopcalc::pathalg
