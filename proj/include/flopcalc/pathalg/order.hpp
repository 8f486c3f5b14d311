#pragma once

#include <string>
#include <vector>

#include "flopcalc/pathalg/quiver.hpp"

namespace flopcalc::pathalg {

/// Degree-lexicographic order: weighted degree first, then letters compared by precedence
/// (earlier in the precedence list is larger). Idempotents compare by vertex position.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// Precedence lists arrow names, highest first; unlisted arrows follow in declaration order.
  MonomialOrder(const Quiver& q, const std::vector<std::string>& precedence = {});

  int compare(const Path& a, const Path& b) const;
  bool greater(const Path& a, const Path& b) const { return compare(a, b) > 0; }
  int degree(const Path& p) const;
  int letter_degree(std::uint8_t letter) const { return degree_[letter]; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  std::vector<std::string> precedence_names(const Quiver& q) const;

 private:
  std::vector<int> degree_;
  std::vector<int> rank_;  // larger rank = larger letter
  std::vector<std::size_t> precedence_;
  std::vector<VertexId> vertex_rank_;
};

}  // namespace flopcalc::pathalg
