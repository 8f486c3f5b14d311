#include <random>

#include "doctest.h"
#include "flopcalc/catalog/catalog.hpp"
#include "flopcalc/coeff/text.hpp"
#include "flopcalc/ncgb/groebner.hpp"
#include "support.hpp"

using namespace flopcalc;
using namespace flopcalc::catalog;
using pathalg::map_element;
using pathalg::parse_element;

namespace {

std::map<std::string, MultiPoly> zero_params(const ParamRing& r) {
  std::map<std::string, MultiPoly> m;
  for (const auto& n : r.names()) m[n] = MultiPoly();
  return m;
}

bool all_reduce(const std::vector<Element>& xs, const ncgb::GroebnerBasis& gb) {
  for (const auto& x : xs)
    if (!ncgb::normal_form(x, gb).is_zero()) return false;
  return true;
}

// Ideal equality of the central fibre and the image of the universal relations at zero parameters.
bool central_matches(const FlopCatalogEntry& e) {
  const auto& cf = e.central_fibre;
  std::map<std::string, Element> arrows;
  for (const auto& [k, v] : e.central_map) arrows[k] = parse_element(v, cf.context);
  std::vector<Element> images;
  for (const auto& r : e.presentation.relations) {
    auto x = map_element(r, cf.context, arrows, zero_params(e.presentation.params()));
    if (!x.is_zero()) images.push_back(x);
  }
  AlgebraPresentation img{cf.context, images, "image"};
  int deg = std::max(cf.max_relation_degree(), img.max_relation_degree());
  auto gb_cf = ncgb::truncated_groebner(cf, deg);
  auto gb_img = ncgb::truncated_groebner(img, deg);
  return all_reduce(images, gb_cf) && all_reduce(cf.relations, gb_img);
}

}  // namespace

TEST_CASE("every builtin parses and round-trips") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto p = builtin(name);
    CHECK_NOTHROW(pathalg::validate(p));
    CHECK(pathalg::parse_presentation(pathalg::print_presentation(p)) == p);
  }
}

TEST_CASE("universal presentations") {
  const auto& l2 = universal_flopping_algebra(2).presentation;
  CHECK(l2.params().size() == 4);
  CHECK(l2.quiver().vertices().size() == 2);
  CHECK(l2.quiver().arrow_count() == 5);
  CHECK(l2.relations.size() == 5);
  CHECK(l2.relations[4] == parse_element("A*a + b + c + d - t/2*e4", l2.context));

  const auto& l1 = universal_flopping_algebra(1).presentation;
  CHECK(l1.quiver().arrow_count() == 4);
  CHECK(l1.relations[0] == parse_element("a0*A0 - A1*a1 - t*e0", l1.context));

  const auto& l5 = universal_flopping_algebra(5).presentation;
  auto rel = parse_element("c*b*c + c^2*b + c*b^3 + T3*c*b + T2*c + T0*e4", l5.context);
  CHECK(std::find(l5.relations.begin(), l5.relations.end(), rel) != l5.relations.end());

  for (int l = 1; l <= 6; ++l) {
    const auto& e = universal_flopping_algebra(l);
    CHECK(e.module_generators.size() == std::size_t(2 * l));
    for (const auto* x : {&e.xprime, &e.y, &e.z}) {
      auto ends = x->endpoints();
      REQUIRE(ends);
      CHECK(ends->first == 0);
      CHECK(ends->second == 0);
    }
    for (const auto& g : e.module_generators) CHECK(g.endpoints()->first == 0);
  }
}

TEST_CASE("preprojective algebras") {
  auto a1 = preprojective(dynkin(DynkinType::A1));
  CHECK(a1.quiver().arrow_count() == 4);
  CHECK(a1.relations.size() == 2);
  auto d4 = preprojective(dynkin(DynkinType::D4));
  REQUIRE(d4.relations.size() == 5);
  CHECK(d4.relations[4] == parse_element("-(A0*a0 + A1*a1 + A2*a2 + A3*a3)", d4.context));
  auto dd4 = deformed_preprojective(dynkin(DynkinType::D4));
  CHECK(dd4.relations[4] == parse_element("-(A0*a0 + A1*a1 + A2*a2 + A3*a3) + (t0 + t1 + t2 + t3)/2*e4", dd4.context));

  for (auto type : {DynkinType::A1, DynkinType::D4, DynkinType::E6, DynkinType::E7, DynkinType::E8}) {
    const auto& d = dynkin(type);
    auto pre = preprojective(d);
    auto def = deformed_preprojective(d);
    REQUIRE(pre.relations.size() == def.relations.size());
    for (std::size_t i = 0; i < pre.relations.size(); ++i)
      CHECK(map_element(def.relations[i], pre.context, {}, zero_params(def.params())) == pre.relations[i]);
    // labels form the null root
    for (int v = 0; v < d.vertex_count(); ++v) {
      int s = 0;
      for (int u = 0; u < d.vertex_count(); ++u) s += d.joined(u, v) * d.labels[u];
      CHECK(s == 2 * d.labels[v]);
    }
  }

  auto e8 = dynkin(DynkinType::E8);
  auto ring = weyl_ring(e8);
  auto sum = coeff::parse_poly("t0 + 2*t1 + 3*t2 + 4*t3 + 5*t4 + 3*t5 + 2*t6 + 4*t7 + 6*t8", ring);
  std::vector<std::optional<MultiPoly>> img(9);
  img[8] = eliminated_parameter(e8, ring);
  CHECK(sum.substitute(img).is_zero());

  auto da1 = deformed_preprojective(dynkin(DynkinType::A1));
  const auto& l1 = universal_flopping_algebra(1).presentation;
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(map_element(da1.relations[i], l1.context, {}, {{"t0", l1.params().var("t")}}) == l1.relations[i]);
}

TEST_CASE("simple reflections") {
  const auto& d4 = dynkin(DynkinType::D4);
  auto r = weyl_ring(d4);
  auto P = [&](const char* s) { return coeff::parse_poly(s, r); };
  CHECK(apply_simple_reflection(d4, 1, P("t1")) == P("-t1"));
  CHECK(apply_simple_reflection(d4, 1, P("t4")) == P("t4 + t1"));
  CHECK(apply_simple_reflection(d4, 1, P("t1^2")) == P("t1^2"));
  CHECK_THROWS(apply_simple_reflection(d4, 0, P("t1")));
  const auto& a1 = dynkin(DynkinType::A1);
  auto ra = weyl_ring(a1);
  CHECK(apply_simple_reflection(a1, 1, coeff::parse_poly("t0", ra)) == coeff::parse_poly("t0 + 2*t1", ra));

  std::mt19937 rng(5);
  for (auto type : {DynkinType::A1, DynkinType::D4, DynkinType::E6, DynkinType::E7, DynkinType::E8}) {
    const auto& d = dynkin(type);
    for (int i = 1; i < d.vertex_count(); ++i) {
      for (int k = 0; k < 5; ++k) {
        auto p = testsupport::random_poly(rng, std::size_t(d.vertex_count()), 4, 3);
        CHECK(apply_simple_reflection(d, i, apply_simple_reflection(d, i, p)) == p);
      }
    }
  }
}

TEST_CASE("invariant generators") {
  for (int l = 1; l <= 6; ++l) {
    auto rep = verify_invariants(universal_flopping_algebra(l));
    for (const auto& line : rep.lines) {
      CAPTURE(l);
      CAPTURE(line.name);
      CAPTURE(line.detail);
      CHECK(line.ok);
    }
  }
  const auto& inv2 = universal_flopping_algebra(2).invariants;
  auto r = weyl_ring(dynkin(DynkinType::D4));
  CHECK(inv2.value(inv2.generators[1]) == coeff::parse_poly("t1^2/4", r));
  const auto& inv3 = universal_flopping_algebra(3).invariants;
  CHECK(inv3.value(inv3.generators.back()) ==
        coeff::parse_poly("t1^2/4", weyl_ring(dynkin(DynkinType::E6))));
  // a generator outside the invariant ring is caught
  auto broken = universal_flopping_algebra(2);
  broken.invariants.generators[1].linear = coeff::parse_poly("t1", r);
  broken.invariants.generators[1].family.clear();
  CHECK_FALSE(verify_invariants(broken).ok());
}

TEST_CASE("central fibres") {
  for (int l = 1; l <= 6; ++l) {
    CAPTURE(l);
    CHECK(central_matches(universal_flopping_algebra(l)));
  }
  auto wrong = universal_flopping_algebra(3);
  wrong.central_map["d"] = "b + c";
  CHECK_FALSE(central_matches(wrong));
  auto wrong5 = universal_flopping_algebra(5);
  wrong5.central_map["d"] = "-b";
  CHECK_FALSE(central_matches(wrong5));
}

TEST_CASE("length-5 intermediate presentation") {
  const auto& l5 = universal_flopping_algebra(5).presentation;
  auto mid = builtin("length5-intermediate");
  auto E = [&](const char* s) { return parse_element(s, mid.context); };
  const auto& r = mid.params();
  auto P = [&](const char* s) { return coeff::parse_poly(s, r); };
  std::map<std::string, Element> arrows{{"b", E("a4*A4 + R1*e4")}, {"c", E("a4*B*A4 - S2*e4")}};
  std::map<std::string, MultiPoly> params{{"T3", P("R2 + S2 - R1^2")},
                                          {"T2", P("R3 - R1*R2 + R1*S2")},
                                          {"T1", P("R2*S2 - R1*R3")},
                                          {"T0", P("R3*S2")}};
  auto gb = ncgb::truncated_groebner(mid, 12);
  for (const auto& rel : l5.relations) {
    CAPTURE(to_string(rel));
    CHECK(ncgb::normal_form(map_element(rel, mid.context, arrows, params), gb).is_zero());
  }
  params["T3"] = P("R2 + S2 + R1^2");
  CHECK_FALSE(ncgb::normal_form(map_element(l5.relations[4], mid.context, arrows, params), gb).is_zero());
}
