#include "flopcalc/pathalg/quiver.hpp"

#include <algorithm>
#include <set>

#include "flopcalc/errors.hpp"

namespace flopcalc::pathalg {

Quiver::Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<VertexId> vs;
  for (auto v : vertices_) {
    if (v < 0 || v > 65535) throw DomainError("vertex id out of range: " + std::to_string(v));
    if (!vs.insert(v).second) throw DomainError("duplicate vertex " + std::to_string(v));
  }
  if (arrows_.size() > 255) throw DomainError("too many arrows (max 255)");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (!names.insert(a.name).second) throw DomainError("duplicate arrow name '" + a.name + "'");
    if (!vs.count(a.source) || !vs.count(a.target))
      throw DomainError("arrow '" + a.name + "' uses an undeclared vertex");
    if (a.degree <= 0) throw DomainError("arrow '" + a.name + "' must have positive degree");
  }
}

bool Quiver::has_vertex(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t Quiver::vertex_position(VertexId v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw DomainError("unknown vertex " + std::to_string(v));
  return std::size_t(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target || x.degree != y.degree) return false;
  }
  return true;
}

Path idempotent(VertexId v) {
  return Path{v, v, {}};
}

Path arrow_path(const Quiver& q, std::size_t arrow) {
  const auto& a = q.arrow(arrow);
  return Path{a.source, a.target, std::string(1, char(arrow))};
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  return Path{p.source, q.target, p.word + q.word};
}

int path_degree(const Quiver& q, const Path& p) {
  int d = 0;
  for (std::size_t i = 0; i < p.length(); ++i) d += q.arrow(p.letter(i)).degree;
  return d;
}

std::string path_string(const Quiver& q, const Path& p) {
  if (p.is_idempotent()) return "e" + std::to_string(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += '*';
    out += q.arrow(p.letter(i)).name;
  }
  return out;
}

}  // namespace flopcalc::pathalg
