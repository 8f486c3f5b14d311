#include "flopcalc/pathalg/order.hpp"

#include <algorithm>

#include "flopcalc/errors.hpp"

namespace flopcalc::pathalg {

MonomialOrder::MonomialOrder(const Quiver& q, const std::vector<std::string>& precedence) {
  const std::size_t n = q.arrow_count();
  degree_.resize(n);
  for (std::size_t i = 0; i < n; ++i) degree_[i] = q.arrow(i).degree;
  std::vector<bool> used(n, false);
  for (const auto& name : precedence) {
    auto i = q.arrow_index(name);
    if (!i) throw DomainError("order mentions unknown arrow '" + name + "'");
    if (used[*i]) throw DomainError("order lists arrow '" + name + "' twice");
    used[*i] = true;
    precedence_.push_back(*i);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) precedence_.push_back(i);
  rank_.resize(n);
  for (std::size_t k = 0; k < n; ++k) rank_[precedence_[k]] = int(n - k);
  vertex_rank_ = q.vertices();
}

int MonomialOrder::degree(const Path& p) const {
  int d = 0;
  for (std::size_t i = 0; i < p.length(); ++i) d += degree_[p.letter(i)];
  return d;
}

int MonomialOrder::compare(const Path& a, const Path& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  if (a.word.empty() || b.word.empty()) {
    if (!a.word.empty()) return 1;
    if (!b.word.empty()) return -1;
    if (a.source == b.source) return 0;
    auto pa = std::find(vertex_rank_.begin(), vertex_rank_.end(), a.source);
    auto pb = std::find(vertex_rank_.begin(), vertex_rank_.end(), b.source);
    return pa < pb ? -1 : 1;
  }
  std::size_t n = std::min(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    int ra = rank_[a.letter(i)], rb = rank_[b.letter(i)];
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  return 0;
}

std::vector<std::string> MonomialOrder::precedence_names(const Quiver& q) const {
  std::vector<std::string> out;
  for (auto i : precedence_) out.push_back(q.arrow(i).name);
  return out;
}

}  // namespace flopcalc::pathalg
