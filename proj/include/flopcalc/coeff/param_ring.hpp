#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flopcalc/coeff/ratfunc.hpp"

namespace flopcalc::coeff {

/// Named polynomial variables; variable i of every polynomial over this ring is names()[i].
class ParamRing {
 public:
  ParamRing() = default;
  explicit ParamRing(std::vector<std::string> names, std::vector<int> degrees = {});

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name).has_value(); }

  MultiPoly var(const std::string& name) const;
  /// Ring with additional names appended (existing names are kept, not duplicated).
  ParamRing extended(const std::vector<std::string>& extra, int degree = 2) const;

  friend bool operator==(const ParamRing& a, const ParamRing& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

/// Images of the variables of `from` as polynomials over `to`; unmapped names must exist in `to`.
std::vector<std::optional<MultiPoly>> substitution_images(const ParamRing& from, const ParamRing& to,
                                                          const std::map<std::string, MultiPoly>& map);

MultiPoly substitute(const MultiPoly& p, const ParamRing& from, const ParamRing& to,
                     const std::map<std::string, MultiPoly>& map);
RatFunc substitute(const RatFunc& p, const ParamRing& from, const ParamRing& to,
                   const std::map<std::string, MultiPoly>& map);

/// Re-index a polynomial from one ring to another by variable name.
MultiPoly rename_into(const MultiPoly& p, const ParamRing& from, const ParamRing& to);
RatFunc rename_into(const RatFunc& p, const ParamRing& from, const ParamRing& to);

}  // namespace flopcalc::coeff
