#pragma once

#include <vector>

#include "flopcalc/coeff/multipoly.hpp"

namespace flopcalc::coeff {

/// Ideal of Q[vars] with a reduced grlex Groebner basis.
class PolyIdeal {
 public:
  PolyIdeal() = default;
  /// Throws BudgetExceeded when completion takes more than `max_pairs` S-polynomials.
  explicit PolyIdeal(std::vector<MultiPoly> generators, std::size_t max_pairs = 100000);

  const std::vector<MultiPoly>& basis() const { return basis_; }
  MultiPoly reduce(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return reduce(p).is_zero(); }

 private:
  std::vector<MultiPoly> basis_;
};

}  // namespace flopcalc::coeff
