#include "flopcalc/catalog/dynkin.hpp"

#include <sstream>

#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"

namespace flopcalc::catalog {

namespace {

std::vector<DynkinDiagram> make_diagrams() {
  return {
      {DynkinType::A1, "A1", {1, 1}, {{0, 1}, {1, 0}}},
      {DynkinType::D4, "D4", {1, 1, 1, 1, 2}, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}},
      {DynkinType::E6, "E6", {1, 2, 1, 2, 1, 2, 3}, {{0, 1}, {1, 6}, {2, 3}, {3, 6}, {4, 5}, {5, 6}}},
      {DynkinType::E7, "E7", {1, 2, 3, 2, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 7}, {3, 7}, {4, 5}, {5, 6}, {6, 7}}},
      {DynkinType::E8,
       "E8",
       {1, 2, 3, 4, 5, 3, 2, 4, 6},
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 8}, {5, 8}, {6, 7}, {7, 8}}},
  };
}

const std::vector<DynkinDiagram>& diagrams() {
  static const std::vector<DynkinDiagram> all = make_diagrams();
  return all;
}

std::string tname(int i) { return "t" + std::to_string(i); }

std::string presentation_text(const DynkinDiagram& d, bool deformed) {
  std::ostringstream os;
  int c = d.eliminated_vertex();
  os << "name: " << (deformed ? "deformed-" : "preprojective-") << d.name << "\nparams:";
  if (deformed) {
    bool first = true;
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (v == c) continue;
      os << (first ? " " : ", ") << tname(v);
      first = false;
    }
  }
  os << "\nvertices:";
  for (int v = 0; v < d.vertex_count(); ++v) os << (v ? ", " : " ") << v;
  os << "\narrows:";
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    auto [s, t] = d.edges[i];
    os << (i ? ", " : " ") << "a" << i << ": " << s << " -> " << t << ", A" << i << ": " << t << " -> " << s;
  }
  os << "\nrelations:\n";
  for (int v = 0; v < d.vertex_count(); ++v) {
    os << " ";
    bool any = false;
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
      if (d.edges[i].first == v) {
        os << (any ? " + " : " ") << "a" << i << "*A" << i;
        any = true;
      }
      if (d.edges[i].second == v) {
        os << (any ? " - " : " -") << "A" << i << "*a" << i;
        any = true;
      }
    }
    if (deformed) {
      if (v == c) {
        os << " + (";
        bool first = true;
        for (int u = 0; u < d.vertex_count(); ++u) {
          if (u == c) continue;
          os << (first ? "" : " + ") << d.labels[u] << "/" << d.labels[c] << "*" << tname(u);
          first = false;
        }
        os << ")*e" << v;
      } else {
        os << " - " << tname(v) << "*e" << v;
      }
    }
    os << (v + 1 < d.vertex_count() ? " ;\n" : "\n");
  }
  return os.str();
}

}  // namespace

int DynkinDiagram::joined(int i, int j) const {
  int k = 0;
  for (auto [s, t] : edges)
    if ((s == i && t == j) || (s == j && t == i)) ++k;
  return k;
}

int DynkinDiagram::eliminated_vertex() const {
  int best = 0;
  for (int v = 1; v < vertex_count(); ++v)
    if (labels[v] >= labels[best]) best = v;
  return best;
}

const DynkinDiagram& dynkin(DynkinType type) { return diagrams()[std::size_t(type)]; }

DynkinType dynkin_type(const std::string& name) {
  for (const auto& d : diagrams())
    if (d.name == name) return d.type;
  throw DomainError("unknown Dynkin type '" + name + "'");
}

ParamRing weyl_ring(const DynkinDiagram& d) {
  std::vector<std::string> names;
  for (int v = 0; v < d.vertex_count(); ++v) names.push_back(tname(v));
  return ParamRing(names);
}

MultiPoly apply_simple_reflection(const DynkinDiagram& d, int i, const MultiPoly& p) {
  if (i <= 0 || i >= d.vertex_count())
    throw DomainError("s" + std::to_string(i) + " is not a simple reflection of " + d.name);
  std::vector<std::optional<MultiPoly>> images(std::size_t(d.vertex_count()));
  MultiPoly ti = MultiPoly::variable(std::size_t(i));
  for (int j = 0; j < d.vertex_count(); ++j) {
    MultiPoly tj = MultiPoly::variable(std::size_t(j));
    if (j == i)
      images[std::size_t(j)] = -ti;
    else if (int k = d.joined(i, j))
      images[std::size_t(j)] = tj + ti * Rational(k);
    else
      images[std::size_t(j)] = tj;
  }
  return p.substitute(images);
}

AlgebraPresentation preprojective(const DynkinDiagram& d) { return pathalg::parse_presentation(presentation_text(d, false)); }

AlgebraPresentation deformed_preprojective(const DynkinDiagram& d) {
  return pathalg::parse_presentation(presentation_text(d, true));
}

MultiPoly eliminated_parameter(const DynkinDiagram& d, const ParamRing& ring) {
  int c = d.eliminated_vertex();
  MultiPoly r;
  for (int u = 0; u < d.vertex_count(); ++u) {
    if (u == c) continue;
    Rational w(d.labels[u], d.labels[c]);
    w.canonicalize();
    r -= ring.var(tname(u)) * w;
  }
  return r;
}

}  // namespace flopcalc::catalog
