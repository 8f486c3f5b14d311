#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flopcalc::pathalg {

using VertexId = int;

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
  int degree = 1;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_[i]; }
  std::size_t arrow_count() const { return arrows_.size(); }
  bool has_vertex(VertexId v) const;
  std::size_t vertex_position(VertexId v) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path; an empty word is the idempotent at `source`. Letters are arrow indices.
struct Path {
  VertexId source = 0;
  VertexId target = 0;
  std::string word;

  bool is_idempotent() const { return word.empty(); }
  std::size_t length() const { return word.size(); }
  std::uint8_t letter(std::size_t i) const { return static_cast<std::uint8_t>(word[i]); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.target == b.target && a.word == b.word;
  }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.word != b.word) return a.word < b.word;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  }
};

struct PathHash {
  std::size_t operator()(const Path& p) const {
    return std::hash<std::string>()(p.word) * 31 + std::size_t(p.source) * 7 + std::size_t(p.target);
  }
};

Path idempotent(VertexId v);
Path arrow_path(const Quiver& q, std::size_t arrow);
/// Concatenation, or nullopt when target(p) != source(q).
std::optional<Path> compose(const Path& p, const Path& q);
int path_degree(const Quiver& q, const Path& p);
std::string path_string(const Quiver& q, const Path& p);

}  // namespace flopcalc::pathalg
