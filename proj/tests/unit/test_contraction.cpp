#include <set>

#include "doctest.h"
#include "flopcalc/catalog/catalog.hpp"
#include "flopcalc/contraction/contraction.hpp"
#include "flopcalc/errors.hpp"
#include "flopcalc/pathalg/linear_span.hpp"

using namespace flopcalc;
using namespace flopcalc::contraction;
using catalog::builtin;
using pathalg::Element;
using pathalg::parse_element;
using pathalg::parse_presentation;

namespace {

// Graded dimension by linear algebra on words: no rewriting system involved.
std::size_t brute_force_dimension(const AlgebraPresentation& alg, int max_len) {
  const auto& q = alg.quiver();
  const auto& ord = alg.order();
  std::vector<std::vector<pathalg::Path>> by_len(std::size_t(max_len) + 1);
  for (auto v : q.vertices()) by_len[0].push_back(pathalg::idempotent(v));
  for (int l = 1; l <= max_len; ++l)
    for (const auto& p : by_len[std::size_t(l - 1)])
      for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (auto n = pathalg::compose(p, pathalg::arrow_path(q, a))) by_len[std::size_t(l)].push_back(*n);
  int min_deg = 1 << 20;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) min_deg = std::min(min_deg, ord.letter_degree(std::uint8_t(a)));
  std::map<int, std::vector<pathalg::Path>> by_deg;
  for (const auto& w : by_len) for (const auto& p : w) by_deg[ord.degree(p)].push_back(p);
  std::size_t total = 0;
  int zero_run = 0;
  for (auto& [deg, words] : by_deg) {
    if (deg > max_len * min_deg) break;
    pathalg::LinearSpan ideal(ord);
    for (const auto& u : by_len)
      for (const auto& pu : u)
        for (const auto& r : alg.relations)
          for (const auto& v : by_len)
            for (const auto& pv : v) {
              if (ord.degree(pu) + r.degree(ord) + ord.degree(pv) != deg) continue;
              auto x = Element::path(alg.context, pu) * r * Element::path(alg.context, pv);
              if (!x.is_zero()) ideal.insert(x);
            }
    std::size_t d = words.size() - ideal.dimension();
    total += d;
    zero_run = d == 0 ? zero_run + 1 : 0;
    if (zero_run >= 3) break;
  }
  return total;
}

}  // namespace

TEST_CASE("contraction presentation") {
  auto laufer = builtin("laufer");
  auto con = contraction_presentation(laufer, 0);
  REQUIRE(con.relations.size() == 2);
  CHECK(con.relations[0] == parse_element("b^2 - c^3", con.context));
  CHECK(con.relations[1] == parse_element("b*c + c*b", con.context));
  CHECK(con.quiver().vertices() == std::vector<VertexId>{4});

  auto free = parse_presentation("vertices: 0, 1\narrows: x: 0 -> 1\nrelations:\n");
  auto fc = contraction_presentation(free, 0);
  CHECK(fc.quiver().arrow_count() == 0);
  CHECK(fc.relations.empty());
  CHECK(ncgb::dimension(fc).value == 1);
  CHECK_THROWS_AS(contraction_presentation(fc, 0), DomainError);

  auto mid = builtin("length5-intermediate");
  auto x = contraction_presentation(contraction_presentation(mid, 0), 8);
  auto y = contraction_presentation(contraction_presentation(mid, 8), 0);
  CHECK(x.quiver() == y.quiver());
  CHECK(x.relations.size() == y.relations.size());
}

TEST_CASE("contraction dimensions") {
  auto d = contraction_dims(builtin("laufer"), 0);
  CHECK(d.dim == 9);
  CHECK(d.dim_ab == 5);
  CHECK(d.global_dim == 9);

  auto one = parse_presentation("vertices: 1\narrows: x: 1 -> 1\nrelations: x^2\n");
  auto l = local_dimension(one);
  CHECK(l.global == 2);
  CHECK(l.local == 2);
  CHECK(local_dimension(abelianization(one)).local == 2);

  // x^2 = x splits off a point away from the origin
  auto split = parse_presentation("vertices: 1\narrows: x: 1 -> 1\nrelations: x^3 - x^2\n");
  auto s = local_dimension(split);
  CHECK(s.global == 3);
  CHECK(s.local == 2);
}

TEST_CASE("length-3 explicit contraction algebra") {
  auto d = contraction_dims(builtin("length3-example"), 0);
  CHECK(d.dim == 27);
  CHECK(d.dim_ab == 6);
  CHECK(d.global_dim >= d.dim);
  auto gv = gv_invariants(d.dim, d.dim_ab, 3);
  REQUIRE(gv.size() == 1);
  CHECK(gv[0] == GvTuple{6, 3, 1, 0, 0, 0});
}

TEST_CASE("central-fibre contraction algebras") {
  // e_black (finite-type preprojective) e_black
  std::size_t expected[] = {1, 4, 12, 24, 40, 60};
  for (int l = 1; l <= 6; ++l) {
    CAPTURE(l);
    const auto& e = catalog::universal_flopping_algebra(l);
    auto con = contraction_presentation(e.central_fibre, 0);
    auto r = ncgb::dimension(con);
    CHECK(r.finite);
    CHECK(r.value == expected[l - 1]);

    const auto& d = catalog::dynkin(e.invariants.coloring.diagram);
    auto pre = contraction_presentation(catalog::preprojective(d), 0);
    auto gb = ncgb::complete_groebner(pre, pre.order());
    auto black = VertexId(e.invariants.coloring.black);
    CHECK(ncgb::enumerate_normal_words(gb, black, black).size() == r.value);
  }
  CHECK(brute_force_dimension(contraction_presentation(builtin("central3"), 0), 8) == 12);
}

TEST_CASE("gv invariants") {
  CHECK(gv_invariants(9, 5, 2) == std::vector<GvTuple>{{5, 1, 0, 0, 0, 0}});
  CHECK(gv_invariants(27, 6, 3) == std::vector<GvTuple>{{6, 3, 1, 0, 0, 0}});
  CHECK(gv_invariants(1, 1, 1) == std::vector<GvTuple>{{1, 0, 0, 0, 0, 0}});
  CHECK(gv_invariants(3, 5).empty());
  CHECK(gv_invariants(9, 5, 3).empty());
  for (std::size_t dim = 1; dim < 80; dim += 7)
    for (std::size_t ab = 0; ab <= dim; ab += 3)
      for (auto n : gv_invariants(dim, ab)) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < 6; ++i) s += n[i] * (i + 1) * (i + 1);
        CHECK(s == dim);
        CHECK(n[0] == ab);
      }
  auto many = gv_invariants(60, 2);
  CHECK(many.size() > 1);
  CHECK(std::set<GvTuple>(many.begin(), many.end()).size() == many.size());
}

TEST_CASE("laufer brute-force oracle") {
  auto con = builtin("laufer-con");
  CHECK(brute_force_dimension(con, 10) == 9);
  CHECK(ncgb::dimension(con).value == 9);

  // associativity of the multiplication table on the normal words
  auto gb = ncgb::complete_groebner(con, con.order());
  auto words = ncgb::enumerate_normal_words(gb);
  REQUIRE(words.size() == 9);
  std::vector<Element> basis;
  for (const auto& w : words) basis.push_back(Element::path(con.context, w));
  auto mul = [&](const Element& x, const Element& y) { return gb.normal_form(x * y); };
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
}
