#include <array>
#include <mutex>

#include "flopcalc/catalog/catalog.hpp"
#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"

namespace flopcalc::catalog {

namespace {

struct Source {
  const char* presentation;
  const char* xprime;
  const char* y;
  const char* z;
  std::vector<const char*> generators;
  const char* central_equation;
  const char* central;
  std::map<std::string, std::string> central_map;
  int gb_degree;
};

const char* kL1 = R"(name: length1
params: t
vertices: 0, 1
arrows: a0: 0 -> 1, A1: 0 -> 1, A0: 1 -> 0, a1: 1 -> 0
relations: a0*A0 - A1*a1 - t*e0 ; a1*A1 - A0*a0 + t*e1
)";

const char* kL2 = R"(name: length2
params: t, T0b (deg 4), T0c (deg 4), T0d (deg 4)
vertices: 0, 4
arrows: a: 0 -> 4, A: 4 -> 0, b: 4 -> 4 (deg 2), c: 4 -> 4 (deg 2), d: 4 -> 4 (deg 2)
order: a, A, d, c, b
relations: a*A - t*e0 ; b^2 - T0b*e4 ; c^2 - T0c*e4 ; d^2 - T0d*e4 ; A*a + b + c + d - 1/2*t*e4
)";

const char* kL3 = R"(name: length3
params: t, T0b (deg 6), T1b (deg 4), T0c (deg 6), T1c (deg 4), T0d (deg 4)
vertices: 0, 6
arrows: a: 0 -> 6 (deg 2), A: 6 -> 0 (deg 2), b: 6 -> 6 (deg 2), c: 6 -> 6 (deg 2), d: 6 -> 6 (deg 2)
order: a, A, d, c, b
relations: d*A - t*A ; a*d - t*a ; a*A - (t^2 - T0d)*e0 ; A*a - d^2 + T0d*e6
  b^3 - T1b*b - T0b*e6 ; c^3 - T1c*c - T0c*e6 ; b + c + d - 1/3*t*e6
)";

const char* kL4 = R"(name: length4
params: t, T0b (deg 4), T0c (deg 8), T1c (deg 6), T2c (deg 4), T0d (deg 6), T1d (deg 4)
vertices: 0, 7
arrows: a: 0 -> 7 (deg 3), A: 7 -> 0 (deg 3), b: 7 -> 7 (deg 2), c: 7 -> 7 (deg 2), d: 7 -> 7 (deg 2)
order: a, A, d, c, b
relations: d*A - t*A ; a*d - t*a ; a*A - (t^3 - T1d*t - T0d)*e0 ; A*a - d^3 + T1d*d + T0d*e7
  b^2 - T0b*e7 ; c^4 - T2c*c^2 - T1c*c - T0c*e7 ; b + c + d - 1/4*t*e7
)";

const char* kL5 = R"(name: length5
params: t, T0d (deg 8), T1d (deg 6), T2d (deg 4), T0 (deg 10), T1 (deg 8), T2 (deg 6), T3 (deg 4)
vertices: 0, 4
arrows: a: 0 -> 4 (deg 4), A: 4 -> 0 (deg 4), b: 4 -> 4 (deg 2), c: 4 -> 4 (deg 4), d: 4 -> 4 (deg 2)
order: a, A, d, c, b
relations: a*d - t*a ; d*A - t*A ; a*A - (t^4 - T2d*t^2 - T1d*t - T0d)*e0
  A*a - d^4 + T2d*d^2 + T1d*d + T0d*e4
  c*b*c + c^2*b + c*b^3 + T3*c*b + T2*c + T0*e4
  (c + b^2)^2 + b*c*b + T3*(c + b^2) + T2*b + T1*e4
  d - b - 1/5*t*e4
)";

const char* kL6 = R"(name: length6
params: t, T0b (deg 4), T0c (deg 6), T1c (deg 4), T0d (deg 10), T1d (deg 8), T2d (deg 6), T3d (deg 4)
vertices: 0, 8
arrows: a: 0 -> 8 (deg 5), A: 8 -> 0 (deg 5), b: 8 -> 8 (deg 2), c: 8 -> 8 (deg 2), d: 8 -> 8 (deg 2)
order: a, A, d, c, b
relations: d*A - t*A ; a*d - t*a ; a*A - (t^5 - T3d*t^3 - T2d*t^2 - T1d*t - T0d)*e0
  A*a - d^5 + T3d*d^3 + T2d*d^2 + T1d*d + T0d*e8
  b^2 - T0b*e8 ; c^3 - T1c*c - T0c*e8 ; b + c + d - 1/6*t*e8
)";

const char* kC1 = R"(name: central1
params:
vertices: 0, 1
arrows: a0: 0 -> 1, A1: 0 -> 1, A0: 1 -> 0, a1: 1 -> 0
relations: a0*A0 - A1*a1 ; a1*A1 - A0*a0
)";

const char* kC2 = R"(name: central2
params:
vertices: 0, 4
arrows: a: 0 -> 4, A: 4 -> 0, b: 4 -> 4 (deg 2), c: 4 -> 4 (deg 2)
order: a, A, c, b
relations: a*A ; b^2 ; c^2 ; (A*a + b + c)^2
)";

const char* kC3 = R"(name: central3
params:
vertices: 0, 6
arrows: a: 0 -> 6 (deg 2), A: 6 -> 0 (deg 2), b: 6 -> 6 (deg 2), c: 6 -> 6 (deg 2)
order: a, A, c, b
relations: a*A ; A*a - (b + c)^2 ; (b + c)*A ; a*(b + c) ; b^3 ; c^3
)";

const char* kC4 = R"(name: central4
params:
vertices: 0, 7
arrows: a: 0 -> 7 (deg 3), A: 7 -> 0 (deg 3), b: 7 -> 7 (deg 2), c: 7 -> 7 (deg 2)
order: a, A, c, b
relations: a*A ; A*a + (b + c)^3 ; (b + c)*A ; a*(b + c) ; b^2 ; c^4
)";

const char* kC5 = R"(name: central5
params:
vertices: 0, 4
arrows: a: 0 -> 4 (deg 4), A: 4 -> 0 (deg 4), b: 4 -> 4 (deg 2), c: 4 -> 4 (deg 4)
order: a, A, c, b
relations: a*A ; A*a - b^4 ; a*b ; b*A ; c*b*c + c^2*b + c*b^3 ; (c + b^2)^2 + b*c*b
)";

const char* kC6 = R"(name: central6
params:
vertices: 0, 8
arrows: a: 0 -> 8 (deg 5), A: 8 -> 0 (deg 5), b: 8 -> 8 (deg 2), c: 8 -> 8 (deg 2)
order: a, A, c, b
relations: a*A ; A*a + (b + c)^5 ; (b + c)*A ; a*(b + c) ; b^2 ; c^3
)";

std::vector<Source> sources() {
  return {
      {kL1, "1/2*(a0*a1 + A1*A0)", "1/2*(a0*a1 - A1*A0)", "a0*A0", {"a0", "A1"}, "x*y - z^2", kC1, {}, 8},
      {kL2,
       "a*b*c*A",
       "a*c*A",
       "a*b*A",
       {"a", "a*b", "a*c", "a*b*c"},
       "x^2 - z*y^2 - z^2*y",
       kC2,
       {{"d", "-(A*a + b + c)"}},
       12},
      {kL3,
       "a*c^2*b*c*A",
       "a*c^2*A",
       "a*c*A",
       {"a", "a*c", "a*c^2", "a*c*b", "a*c^2*b", "a*c^2*b*c"},
       "x^2 - z^2*x + y^3",
       kC3,
       {{"d", "-(b + c)"}},
       24},
      {kL4,
       "a*c^3*b*c^2*A",
       "a*c^3*A",
       "a*c*A",
       {"a", "a*c", "a*c^2", "a*c^3", "a*c^2*b", "a*c^3*b", "a*c^3*b*c", "a*c^3*b*c^2"},
       "x^2 - y^3 + y*z^3",
       kC4,
       {{"d", "-(b + c)"}},
       36},
      {kL5,
       "a*c^3*b*c^2*A",
       "a*c^3*A",
       "a*c*A",
       {"a", "a*c", "a*c^2", "a*c*b", "a*c^3", "a*c^2*b", "a*c^3*b", "a*c^3*b*c", "a*c^3*b^2", "a*c^3*b*c^2"},
       "x^2 - y^3 - z^5",
       kC5,
       {{"d", "b"}},
       60},
      {kL6,
       "a*c^2*b*c^2*b*c*b*c^2*A",
       "a*c^2*b*c^2*A",
       "a*c*A",
       {"a", "a*c", "a*c^2", "a*c^2*b", "a*c^2*b*c", "a*c^2*b*c^2", "a*c^2*b*c*b", "a*c^2*b*c^2*b", "a*c^2*b*c^2*b*c",
        "a*c^2*b*c^2*b*c*b", "a*c^2*b*c^2*b*c*b*c", "a*c^2*b*c^2*b*c*b*c^2"},
       "x^2 - y^3 + z^5",
       kC6,
       {{"d", "-(b + c)"}},
       60},
  };
}

struct FamilySource {
  const char* name;
  std::vector<const char*> roots;
};

struct GeneratorSource {
  const char* name;
  const char* family;  // nullptr: linear
  std::size_t k;
  long num, den;
  const char* linear;
};

struct InvariantSource {
  DynkinType type;
  int black;
  std::vector<int> reflections;
  std::vector<FamilySource> families;
  std::vector<GeneratorSource> generators;
};

std::vector<InvariantSource> invariant_sources() {
  return {
      {DynkinType::A1, 1, {}, {}, {{"t", nullptr, 0, 1, 1, "t0"}}},
      {DynkinType::D4,
       4,
       {1, 2, 3},
       {{"b", {"t1/2", "-t1/2"}}, {"c", {"t2/2", "-t2/2"}}, {"d", {"t3/2", "-t3/2"}}},
       {{"t", nullptr, 0, 1, 1, "t0"},
        {"T0b", "b", 2, -1, 1, nullptr},
        {"T0c", "c", 2, -1, 1, nullptr},
        {"T0d", "d", 2, -1, 1, nullptr}}},
      {DynkinType::E6,
       6,
       {1, 2, 3, 4, 5},
       {{"b", {"(t2 + 2*t3)/3", "(t2 - t3)/3", "-(2*t2 + t3)/3"}},
        {"c", {"(t4 + 2*t5)/3", "(t4 - t5)/3", "-(2*t4 + t5)/3"}},
        {"d", {"t1/2", "-t1/2"}}},
       {{"t", nullptr, 0, 1, 1, "(2*t0 + t1)/2"},
        {"T0b", "b", 3, -1, 1, nullptr},
        {"T1b", "b", 2, -1, 1, nullptr},
        {"T0c", "c", 3, -1, 1, nullptr},
        {"T1c", "c", 2, -1, 1, nullptr},
        {"T0d", "d", 2, -1, 1, nullptr}}},
      {DynkinType::E7,
       7,
       {1, 2, 3, 4, 5, 6},
       {{"b", {"t3/2", "-t3/2"}},
        {"c",
         {"(t4 + 2*t5 + 3*t6)/4", "(t4 + 2*t5 - t6)/4", "(t4 - 2*t5 - t6)/4", "-(3*t4 + 2*t5 + t6)/4"}},
        {"d", {"(t1 + 2*t2)/3", "(t1 - t2)/3", "-(2*t1 + t2)/3"}}},
       {{"t", nullptr, 0, 1, 1, "(3*t0 + 2*t1 + t2)/3"},
        {"T0b", "b", 2, -1, 1, nullptr},
        {"T0c", "c", 4, -1, 1, nullptr},
        {"T1c", "c", 3, -1, 1, nullptr},
        {"T2c", "c", 2, -1, 1, nullptr},
        {"T0d", "d", 3, -1, 1, nullptr},
        {"T1d", "d", 2, -1, 1, nullptr}}},
      {DynkinType::E8,
       4,
       {1, 2, 3, 5, 6, 7, 8},
       {{"d",
         {"(t1 + 2*t2 + 3*t3)/4", "(t1 + 2*t2 - t3)/4", "(t1 - 2*t2 - t3)/4", "-(3*t1 + 2*t2 + t3)/4"}},
        {"tau",
         {"(t5 + 2*t8 + 3*t7 + 4*t6)/5", "(t5 + 2*t8 + 3*t7 - t6)/5", "(t5 + 2*t8 - 2*t7 - t6)/5",
          "(t5 - 3*t8 - 2*t7 - t6)/5", "(-4*t5 - 3*t8 - 2*t7 - t6)/5"}}},
       {{"t", nullptr, 0, 1, 1, "(4*t0 + 3*t1 + 2*t2 + t3)/4"},
        {"T0d", "d", 4, -1, 1, nullptr},
        {"T1d", "d", 3, -1, 1, nullptr},
        {"T2d", "d", 2, -1, 1, nullptr},
        {"T0", "tau", 5, -1, 1, nullptr},
        {"T1", "tau", 4, -1, 1, nullptr},
        {"T2", "tau", 3, -1, 1, nullptr},
        {"T3", "tau", 2, -1, 1, nullptr}}},
      {DynkinType::E8,
       8,
       {1, 2, 3, 4, 5, 6, 7},
       {{"b", {"t5/2", "-t5/2"}},
        {"c", {"(t6 + 2*t7)/3", "(t6 - t7)/3", "-(2*t6 + t7)/3"}},
        {"d",
         {"(t1 + 2*t2 + 3*t3 + 4*t4)/5", "(t1 + 2*t2 + 3*t3 - t4)/5", "(t1 + 2*t2 - 2*t3 - t4)/5",
          "(t1 - 3*t2 - 2*t3 - t4)/5", "-(4*t1 + 3*t2 + 2*t3 + t4)/5"}}},
       {{"t", nullptr, 0, 1, 1, "(5*t0 + 4*t1 + 3*t2 + 2*t3 + t4)/5"},
        {"T0b", "b", 2, -1, 1, nullptr},
        {"T0c", "c", 3, 1, 1, nullptr},
        {"T1c", "c", 2, -1, 1, nullptr},
        {"T0d", "d", 5, -1, 1, nullptr},
        {"T1d", "d", 4, -1, 1, nullptr},
        {"T2d", "d", 3, -1, 1, nullptr},
        {"T3d", "d", 2, -1, 1, nullptr}}},
  };
}

InvariantData build_invariants(const InvariantSource& s) {
  InvariantData d;
  d.coloring = {s.type, s.black};
  d.reflections = s.reflections;
  ParamRing ring = weyl_ring(dynkin(s.type));
  for (const auto& f : s.families) {
    TauFamily fam{f.name, {}};
    for (const char* r : f.roots) fam.roots.push_back(coeff::parse_poly(r, ring));
    d.families.push_back(std::move(fam));
  }
  for (const auto& g : s.generators) {
    InvariantGenerator gen;
    gen.name = g.name;
    if (g.family) {
      gen.family = g.family;
      gen.k = g.k;
      gen.scale = Rational(g.num, g.den);
      gen.scale.canonicalize();
    } else {
      gen.linear = coeff::parse_poly(g.linear, ring);
    }
    d.generators.push_back(std::move(gen));
  }
  return d;
}

FlopCatalogEntry build_entry(int l) {
  const auto src = sources()[std::size_t(l - 1)];
  FlopCatalogEntry e;
  e.length = l;
  e.presentation = pathalg::parse_presentation(src.presentation);
  const auto& ctx = e.presentation.context;
  e.xprime = pathalg::parse_element(src.xprime, ctx);
  e.y = pathalg::parse_element(src.y, ctx);
  e.z = pathalg::parse_element(src.z, ctx);
  for (const char* g : src.generators) e.module_generators.push_back(pathalg::parse_element(g, ctx));
  e.central_equation = src.central_equation;
  e.central_fibre = pathalg::parse_presentation(src.central);
  e.central_map = src.central_map;
  if (l == 1) e.table_variables = {{"x", "(x + y)/2"}, {"y", "(x - y)/2"}};
  e.invariants = build_invariants(invariant_sources()[std::size_t(l - 1)]);
  e.gb_degree = src.gb_degree;
  return e;
}

}  // namespace

const TauFamily& InvariantData::family(const std::string& name) const {
  for (const auto& f : families)
    if (f.name == name) return f;
  throw DomainError("unknown tau family '" + name + "'");
}

MultiPoly InvariantData::value(const InvariantGenerator& g) const {
  if (g.family.empty()) return g.linear;
  return coeff::elementary_symmetric(g.k, family(g.family).roots) * g.scale;
}

const FlopCatalogEntry& universal_flopping_algebra(int l) {
  if (l < 1 || l > 6) throw DomainError("length must be between 1 and 6");
  static std::array<FlopCatalogEntry, 6> entries;
  static std::array<std::once_flag, 6> flags;
  std::call_once(flags[std::size_t(l - 1)], [l] { entries[std::size_t(l - 1)] = build_entry(l); });
  return entries[std::size_t(l - 1)];
}

}  // namespace flopcalc::catalog
