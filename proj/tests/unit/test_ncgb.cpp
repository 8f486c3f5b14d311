#include <algorithm>
#include <chrono>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "flopcalc/errors.hpp"
#include "flopcalc/ncgb/groebner.hpp"
#include "samples.hpp"

using namespace flopcalc;
using namespace flopcalc::ncgb;
using pathalg::parse_element;
using pathalg::parse_presentation;

namespace {

Element E(const AlgebraPresentation& p, const char* s) { return parse_element(s, p.context); }

}  // namespace

TEST_CASE("free algebra has an empty basis") {
  auto alg = parse_presentation("vertices: 0\narrows: x: 0 -> 0, y: 0 -> 0\n");
  auto gb = truncated_groebner(alg, 5);
  CHECK(gb.size() == 0);
  CHECK(gb.complete());
  CHECK(enumerate_normal_words(gb, std::nullopt, std::nullopt, 2).size() == 7);
  CHECK(!finite_normal_words(gb));
  CHECK(!dimension(alg).finite);
}

TEST_CASE("commutator completes and sorts words") {
  auto alg = parse_presentation("vertices: 0\narrows: a: 0 -> 0, b: 0 -> 0\nrelations: a*b - b*a\n");
  auto gb = truncated_groebner(alg, 8);
  CHECK(gb.complete());
  CHECK(gb.size() == 1);
  // brute force: every word of length <= 4 reduces to its sorted rearrangement
  for (int len = 0; len <= 4; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (mask >> i) & 1 ? 'b' : 'a';
      std::string text = len == 0 ? "e0" : "";
      for (int i = 0; i < len; ++i) text += (i ? "*" : "") + std::string(1, w[i]);
      std::string sorted = w;
      std::sort(sorted.begin(), sorted.end(), std::greater<char>());
      std::string stext = len == 0 ? "e0" : "";
      for (int i = 0; i < len; ++i) stext += (i ? "*" : "") + std::string(1, sorted[i]);
      CHECK(normal_form(E(alg, text.c_str()), gb) == E(alg, stext.c_str()));
    }
    CHECK(enumerate_normal_words(gb, std::nullopt, std::nullopt, len).size() == std::size_t((len + 1) * (len + 2) / 2));
  }
}

TEST_CASE("small finite-dimensional algebras") {
  CHECK(dimension(parse_presentation("vertices: 0\narrows: x: 0 -> 0\nrelations: x^2\n")).value == 2);
  auto d4 = parse_presentation("vertices: 0\narrows: b: 0 -> 0, c: 0 -> 0\nrelations: b^2 ; c^2 ; (b + c)^2\n");
  auto r = dimension(d4);
  CHECK(r.finite);
  CHECK(r.value == 4);
  auto laufer = parse_presentation(testsupport::kLauferCon);
  auto lr = dimension(laufer);
  CHECK(lr.finite);
  CHECK(lr.value == 9);
  auto killed = parse_presentation("vertices: 0, 1\narrows: x: 0 -> 1, y: 1 -> 0\nrelations: x*y - e0\n");
  auto kr = dimension(killed);
  CHECK(kr.finite);
}

TEST_CASE("laufer multiplication table is associative") {
  auto alg = parse_presentation(testsupport::kLauferCon);
  auto r = dimension(alg);
  auto gb = truncated_groebner(alg, r.degree);
  auto words = enumerate_normal_words(gb);
  REQUIRE(words.size() == 9);
  std::vector<Element> basis;
  for (const auto& w : words) basis.push_back(Element::path(alg.context, w));
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        auto xy = normal_form(x * y, gb);
        auto yz = normal_form(y * z, gb);
        CHECK(normal_form(xy * z, gb) == normal_form(x * yz, gb));
      }
}

TEST_CASE("length-2 basis") {
  auto alg = parse_presentation(testsupport::kLength2);
  auto t0 = std::chrono::steady_clock::now();
  auto gb = truncated_groebner(alg, 6);
  MESSAGE("length-2 degree 6: " << gb.size() << " rules, "
                                 << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s");
  CHECK(normal_form(E(alg, "a*A"), gb) == E(alg, "t*e0"));
  CHECK(normal_form(Element(alg.context), gb).is_zero());
  for (const auto& rel : alg.relations) CHECK(normal_form(rel, gb).is_zero());
  CHECK_THROWS_AS(normal_form(E(alg, "a*b*b*b*b*b*b*A"), gb), DomainError);

  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto x = testsupport::random_element(rng, alg, 6, 3), y = testsupport::random_element(rng, alg, 6, 3);
    auto nx = normal_form(x, gb), ny = normal_form(y, gb);
    CHECK(normal_form(nx, gb) == nx);
    RatFunc al(3), be(pathalg::MultiPoly::variable(0));
    CHECK(normal_form(x.scaled(al) + y.scaled(be), gb) == nx.scaled(al) + ny.scaled(be));
  }
  for (int i = 0; i < 200; ++i) {
    const auto& rel = alg.relations[std::size_t(i) % alg.relations.size()];
    auto u = testsupport::random_element(rng, alg, 2, 1), v = testsupport::random_element(rng, alg, 2, 1);
    auto prod = u * rel * v;
    if (prod.is_zero() || prod.degree(alg.order()) > 6) continue;
    CHECK(normal_form(prod, gb).is_zero());
  }
  CHECK(serialize(gb) == serialize(truncated_groebner(alg, 6)));
}

TEST_CASE("budget is enforced") {
  auto alg = parse_presentation(testsupport::kLength2);
  CHECK_THROWS_AS(truncated_groebner(alg, 8, 50), BudgetExceeded);
  CHECK_THROWS_AS(truncated_groebner(alg, 1), DomainError);
}
