#include <algorithm>

#include "flopcalc/catalog/catalog.hpp"
#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"

namespace flopcalc::catalog {

namespace {

const char* kLength5Intermediate = R"(name: length5-intermediate
params: t, T0d (deg 8), T1d (deg 6), T2d (deg 4), R1, R2 (deg 4), R3 (deg 6), S2 (deg 4)
vertices: 0, 4, 8
arrows: a: 0 -> 4 (deg 4), A: 4 -> 0 (deg 4), d: 4 -> 4 (deg 2), a4: 4 -> 8, A4: 8 -> 4,
  B: 8 -> 8 (deg 2), C: 8 -> 8 (deg 2)
order: a, A, d, a4, A4, C, B
relations: a*d - t*a ; d*A - t*A ; a*A - (t^4 - T2d*t^2 - T1d*t - T0d)*e0
  A*a - d^4 + T2d*d^2 + T1d*d + T0d*e4
  a4*A4 - d + (R1 + t/5)*e4 ; A4*a4 + B + C + R1*e8
  B^2 + R1*B + S2*e8 ; C^3 - R1*C^2 + R2*C - R3*e8
)";

const char* kLauferNccr = R"(name: laufer-nccr
params: t, y (deg 4), z (deg 4)
vertices: 0, 4
arrows: a: 0 -> 4, A: 4 -> 0, b: 4 -> 4 (deg 2), c: 4 -> 4 (deg 2), d: 4 -> 4 (deg 2)
order: a, A, d, c, b
relations: a*A - t*e0 ; b^2 + y*e4 ; c^2 - t*e4 ; d^2 - (t^2/4 + t + z)*e4 ; A*a + b + c + d - 1/2*t*e4
)";

const char* kLaufer = R"(name: laufer
params:
vertices: 0, 4
arrows: a: 0 -> 4 (deg 2), A: 4 -> 0 (deg 2), b: 4 -> 4 (deg 3), c: 4 -> 4 (deg 2)
order: a, A, c, b
relations: a*A*a - a*c^2 ; A*a*A - c^2*A ; b^2 - c^3 + A*a*c + c*A*a ; b*c + c*b
)";

const char* kLauferCon = R"(name: laufer-con
params:
vertices: 4
arrows: b: 4 -> 4 (deg 3), c: 4 -> 4 (deg 2)
order: c, b
relations: c^3 - b^2 ; b*c + c*b
)";

const char* kLength3Nccr = R"(name: length3-nccr
params: T (deg 6)
vertices: 0, 6
arrows: a: 0 -> 6 (deg 2), A: 6 -> 0 (deg 2), b: 6 -> 6 (deg 2), c: 6 -> 6 (deg 2), d: 6 -> 6 (deg 2)
order: a, A, d, c, b
relations: d*A ; a*d ; a*A + T*e0 ; A*a - d^2 + T*e6 ; b^3 - T*e6 ; c^3 - T*e6 ; b + c + d
)";

const char* kLength3 = R"(name: length3-example
params:
vertices: 0, 6
arrows: a: 0 -> 6, A: 6 -> 0, b: 6 -> 6, c: 6 -> 6
order: a, A, c, b
relations: (b + c)*A ; a*(b + c) ; A*a - (b + c)^2 + b^3 ; A*a - (b + c)^2 + c^3
)";

const char* kLength3Con = R"(name: length3-con
params:
vertices: 6
arrows: b: 6 -> 6, c: 6 -> 6
order: c, b
relations: (b + c)^2 - b^3 ; (b + c)^2 - c^3
)";

const char* kLength4 = R"(name: length4-example
params:
vertices: 0, 7
arrows: a: 0 -> 7, A: 7 -> 0, b: 7 -> 7, c: 7 -> 7
order: a, A, c, b
relations: (b + c)*A ; a*(b + c) ; b^2 + A*a - (-b - c)^3 ; c^4 + A*a - (-b - c)^3
)";

const char* kLength5 = R"(name: length5-example
params:
vertices: 0, 4
arrows: a: 0 -> 4, A: 4 -> 0, b: 4 -> 4, c: 4 -> 4
order: a, A, c, b
relations: a*b ; b*A
  A*a + c*b*c + c^2*b + b*c^2 + c*b^3 + b^3*c + b^2*c*b + b*c*b^2 + b^5 - b^4
  c^2 + c*b^2 + b^2*c + b*c*b + b^4
)";

const char* kLength6 = R"(name: length6-example
params:
vertices: 0, 8
arrows: a: 0 -> 8, A: 8 -> 0, b: 8 -> 8, c: 8 -> 8
order: a, A, c, b
relations: (b + c)*A ; a*(b + c) ; b^2 + A*a - (-b - c)^5 ; c^3 + A*a - (-b - c)^5
)";

struct Named {
  const char* name;
  const char* text;
};

const std::vector<Named>& named_texts() {
  static const std::vector<Named> all = {
      {"length5-intermediate", kLength5Intermediate},
      {"laufer-nccr", kLauferNccr},
      {"laufer", kLaufer},
      {"laufer-con", kLauferCon},
      {"length3-nccr", kLength3Nccr},
      {"length3-example", kLength3},
      {"length3-con", kLength3Con},
      {"length4-example", kLength4},
      {"length5-example", kLength5},
      {"length6-example", kLength6},
  };
  return all;
}

const char* kDiagramNames[] = {"A1", "D4", "E6", "E7", "E8"};

ClassifyingMap make_map(const char* name, int length, std::vector<std::string> target, std::vector<int> degrees,
                        std::vector<std::pair<const char*, const char*>> images) {
  ClassifyingMap m{name, length, ParamRing(std::move(target), std::move(degrees)), {}};
  for (auto [k, v] : images) m.images[k] = coeff::parse_poly(v, m.target);
  return m;
}

const std::vector<ClassifyingMap>& maps() {
  static const std::vector<ClassifyingMap> all = {
      make_map("laufer", 2, {"t", "y", "z"}, {2, 4, 4}, {{"T0b", "-y"}, {"T0c", "t"}, {"T0d", "t^2/4 + t + z"}}),
      make_map("length3", 3, {"T"}, {6},
               {{"t", "0"}, {"T1b", "0"}, {"T1c", "0"}, {"T0b", "T"}, {"T0c", "T"}, {"T0d", "T"}}),
      make_map("length3-t1", 3, {"T"}, {6},
               {{"t", "0"}, {"T1b", "T"}, {"T1c", "T"}, {"T0b", "T"}, {"T0c", "T"}, {"T0d", "T"}}),
      make_map("length4", 4, {"T"}, {6},
               {{"t", "0"}, {"T0b", "T"}, {"T0c", "T"}, {"T1c", "0"}, {"T2c", "0"}, {"T0d", "T"}, {"T1d", "0"}}),
      make_map("length5", 5, {"T"}, {6},
               {{"t", "0"},
                {"T0d", "T"},
                {"T1d", "0"},
                {"T2d", "0"},
                {"T0", "T"},
                {"T1", "T"},
                {"T2", "0"},
                {"T3", "0"}}),
      make_map("length6", 6, {"T"}, {6},
               {{"t", "0"},
                {"T0b", "T"},
                {"T0c", "T"},
                {"T1c", "0"},
                {"T0d", "T"},
                {"T1d", "0"},
                {"T2d", "0"},
                {"T3d", "0"}}),
  };
  return all;
}

const std::vector<std::pair<std::string, SuperpotentialData>>& superpotentials() {
  static const std::vector<std::pair<std::string, SuperpotentialData>> all = {
      {"laufer", {"laufer", "1/2*a*A*a*A - a*c^2*A - c*b^2 + 1/4*c^4", {}}},
      {"length3",
       {"length3-example",
        "a*b*A + a*c*A - b^4 - c^4 - (-b - c)^3",
        {{"b", Rational(3, 4)}, {"c", Rational(3, 4)}, {"A", Rational(-27, 16)}}}},
  };
  return all;
}

}  // namespace

bool Report::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (int l = 1; l <= 6; ++l) out.push_back("length" + std::to_string(l));
  for (int l = 1; l <= 6; ++l) out.push_back("central" + std::to_string(l));
  for (const char* d : kDiagramNames) out.push_back(std::string("preprojective-") + d);
  for (const char* d : kDiagramNames) out.push_back(std::string("deformed-") + d);
  for (const auto& n : named_texts()) out.push_back(n.name);
  return out;
}

AlgebraPresentation builtin(const std::string& name) {
  for (int l = 1; l <= 6; ++l) {
    if (name == "length" + std::to_string(l)) return universal_flopping_algebra(l).presentation;
    if (name == "central" + std::to_string(l)) return universal_flopping_algebra(l).central_fibre;
  }
  for (const char* d : kDiagramNames) {
    if (name == std::string("preprojective-") + d) return preprojective(dynkin(dynkin_type(d)));
    if (name == std::string("deformed-") + d) return deformed_preprojective(dynkin(dynkin_type(d)));
  }
  for (const auto& n : named_texts())
    if (name == n.name) return pathalg::parse_presentation(n.text);
  throw DomainError("unknown builtin '" + name + "'");
}

std::vector<std::string> classifying_map_names() {
  std::vector<std::string> out;
  for (const auto& m : maps()) out.push_back(m.name);
  return out;
}

const ClassifyingMap& classifying_map(const std::string& name) {
  for (const auto& m : maps())
    if (m.name == name) return m;
  throw DomainError("unknown classifying map '" + name + "'");
}

std::vector<std::string> superpotential_names() {
  std::vector<std::string> out;
  for (const auto& [n, _] : superpotentials()) out.push_back(n);
  return out;
}

const SuperpotentialData& superpotential(const std::string& name) {
  for (const auto& [n, s] : superpotentials())
    if (n == name) return s;
  throw DomainError("unknown superpotential '" + name + "'");
}

Report verify_invariants(const FlopCatalogEntry& e) {
  Report r;
  const auto& inv = e.invariants;
  const auto& d = dynkin(inv.coloring.diagram);
  const auto& params = e.presentation.params();
  for (const auto& g : inv.generators) {
    MultiPoly v = inv.value(g);
    std::vector<int> moved;
    for (int i : inv.reflections)
      if (!(apply_simple_reflection(d, i, v) == v)) moved.push_back(i);
    std::string detail;
    for (int i : moved) detail += (detail.empty() ? "moved by s" : ", s") + std::to_string(i);
    r.lines.push_back({g.name + " fixed by W_C", moved.empty(), detail});

    auto idx = params.index_of(g.name);
    bool homogeneous = !v.is_zero();
    unsigned deg = v.is_zero() ? 0 : v.total_degree();
    for (const auto& t : v.terms()) homogeneous = homogeneous && t.mono.degree() == deg;
    bool ok = idx && homogeneous && params.degree(*idx) == int(2 * deg);
    r.lines.push_back({g.name + " degree", ok,
                       ok ? "" : (idx ? "parameter degree " + std::to_string(params.degree(*idx)) + ", generator degree " +
                                            std::to_string(2 * deg)
                                      : "not a parameter")});
  }
  r.lines.push_back({"generators cover parameters", inv.generators.size() == params.size(), ""});
  for (const auto& f : inv.families) {
    bool ok = true;
    for (int i : inv.reflections) {
      std::vector<MultiPoly> img;
      for (const auto& x : f.roots) img.push_back(apply_simple_reflection(d, i, x));
      for (const auto& x : f.roots) {
        auto it = std::find(img.begin(), img.end(), x);
        if (it == img.end()) {
          ok = false;
          break;
        }
        img.erase(it);
      }
    }
    r.lines.push_back({"tau family " + f.name + " permuted by W_C", ok, ""});
  }
  return r;
}

}  // namespace flopcalc::catalog
