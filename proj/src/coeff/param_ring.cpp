#include "flopcalc/coeff/param_ring.hpp"

#include <set>

#include "flopcalc/errors.hpp"

namespace flopcalc::coeff {

ParamRing::ParamRing(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() > kMaxVars) throw DomainError("too many parameters (max " + std::to_string(kMaxVars) + ")");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw DomainError("duplicate parameter name '" + n + "'");
  if (degrees_.empty()) degrees_.assign(names_.size(), 2);
  if (degrees_.size() != names_.size()) throw DomainError("parameter degree list has wrong length");
}

std::optional<std::size_t> ParamRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

MultiPoly ParamRing::var(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw DomainError("unknown parameter '" + name + "'");
  return MultiPoly::variable(*i);
}

ParamRing ParamRing::extended(const std::vector<std::string>& extra, int degree) const {
  auto names = names_;
  auto degrees = degrees_;
  for (const auto& e : extra) {
    if (contains(e)) continue;
    names.push_back(e);
    degrees.push_back(degree);
  }
  return ParamRing(std::move(names), std::move(degrees));
}

std::vector<std::optional<MultiPoly>> substitution_images(const ParamRing& from, const ParamRing& to,
                                                          const std::map<std::string, MultiPoly>& map) {
  std::vector<std::optional<MultiPoly>> images(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = map.find(from.name(i));
    if (it != map.end()) {
      images[i] = it->second;
      continue;
    }
    if (auto j = to.index_of(from.name(i))) images[i] = MultiPoly::variable(*j);
  }
  for (const auto& [name, _] : map)
    if (!from.contains(name)) throw DomainError("substitution maps unknown parameter '" + name + "'");
  return images;
}

namespace {

void check_images(const MultiPoly& p, const ParamRing& from, const std::vector<std::optional<MultiPoly>>& images) {
  for (std::size_t i = 0, n = p.support_bound(); i < n; ++i)
    if (p.contains_var(i) && (i >= images.size() || !images[i]))
      throw DomainError("parameter '" + (i < from.size() ? from.name(i) : std::to_string(i)) +
                        "' is neither mapped nor retained");
}

}  // namespace

MultiPoly substitute(const MultiPoly& p, const ParamRing& from, const ParamRing& to,
                     const std::map<std::string, MultiPoly>& map) {
  auto images = substitution_images(from, to, map);
  check_images(p, from, images);
  return p.substitute(images);
}

RatFunc substitute(const RatFunc& p, const ParamRing& from, const ParamRing& to,
                   const std::map<std::string, MultiPoly>& map) {
  auto images = substitution_images(from, to, map);
  check_images(p.num(), from, images);
  check_images(p.den(), from, images);
  return p.substitute(images);
}

MultiPoly rename_into(const MultiPoly& p, const ParamRing& from, const ParamRing& to) {
  if (from == to) return p;
  return substitute(p, from, to, {});
}

RatFunc rename_into(const RatFunc& p, const ParamRing& from, const ParamRing& to) {
  if (from == to) return p;
  return substitute(p, from, to, {});
}

}  // namespace flopcalc::coeff
