#include <random>

#include "doctest.h"
#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"
#include "support.hpp"

using namespace flopcalc::coeff;
using testsupport::random_nonzero;
using testsupport::random_poly;

namespace {

ParamRing ring7() { return ParamRing({"x", "y", "z", "u", "v", "w", "t"}); }

MultiPoly P(const char* s) { return parse_poly(s, ring7()); }

}  // namespace

TEST_CASE("monomial products and cancellation") {
  CHECK(P("t*u") * P("t*w") == P("t^2*u*w"));
  CHECK((P("u*w - v^2") - P("u*w - v^2")).is_zero());
  RatFunc f(P("t^2 - u"), P("t"));
  CHECK(f.den() == P("t"));
  CHECK(f * RatFunc(P("t")) == RatFunc(P("t^2 - u")));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng, 4, 4, 3), b = random_poly(rng, 4, 4, 3), c = random_poly(rng, 4, 3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a + MultiPoly() == a);
    CHECK(a * MultiPoly(Rational(1)) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("rational function field axioms") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    RatFunc a(random_poly(rng, 3, 3, 2), random_nonzero(rng, 3, 2, 2));
    RatFunc b(random_poly(rng, 3, 3, 2), random_nonzero(rng, 3, 2, 2));
    RatFunc c(random_poly(rng, 3, 2, 2), random_nonzero(rng, 3, 2, 1));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a / a).is_one());
    CHECK(a.den().leading_coeff() == 1);
    CHECK(gcd(a.num(), a.den()).is_one());
  }
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(), flopcalc::DivisionByZero);
}

TEST_CASE("gcd recovers planted common factors") {
  std::mt19937 rng(3);
  for (int i = 0; i < 80; ++i) {
    auto g = random_nonzero(rng, 4, 3, 2);
    auto p = random_nonzero(rng, 4, 3, 2), q = random_nonzero(rng, 4, 3, 2);
    auto a = g * p, b = g * q;
    auto h = gcd(a, b);
    REQUIRE(divide_exact(a, h));
    REQUIRE(divide_exact(b, h));
    CHECK(divide_exact(h, g.monic()));
    auto ca = *divide_exact(a, h), cb = *divide_exact(b, h);
    CHECK(gcd(ca, cb).is_one());
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937 rng(9);
  std::vector<std::optional<MultiPoly>> images(4);
  for (int i = 0; i < 50; ++i) {
    for (auto& im : images) im = random_poly(rng, 4, 2, 2);
    auto a = random_poly(rng, 4, 3, 3), b = random_poly(rng, 4, 3, 3);
    CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
    CHECK((a + b).substitute(images) == a.substitute(images) + b.substitute(images));
  }
}

TEST_CASE("substitute examples") {
  ParamRing r = ring7();
  auto f = P("x^2 + u*y^2 + 2*v*y*z + w*z^2 + (u*w - v^2)*t^2");
  auto g = substitute(f, r, r, {{"w", P("-t")}, {"u", P("y")}, {"v", P("0")}});
  CHECK(g == P("x^2 + y^3 - t*z^2 - y*t^3"));
  CHECK(substitute(f, r, r, {}) == f);
  CHECK(substitute(P("t^2"), r, r, {{"t", MultiPoly()}}).is_zero());
  ParamRing small({"t"});
  CHECK_THROWS_AS(substitute(P("u"), r, small, {}), flopcalc::DomainError);
}

TEST_CASE("elementary symmetric polynomials") {
  ParamRing r({"t1", "a", "b", "c", "X"});
  auto t1 = r.var("t1");
  std::vector<MultiPoly> tau{t1 * Rational(1, 2), t1 * Rational(-1, 2)};
  CHECK(elementary_symmetric(2, tau) == t1 * t1 * Rational(-1, 4));
  std::vector<MultiPoly> abc{r.var("a"), r.var("b"), r.var("c")};
  CHECK(elementary_symmetric(1, abc) == r.var("a") + r.var("b") + r.var("c"));
  CHECK(elementary_symmetric(3, abc) == r.var("a") * r.var("b") * r.var("c"));
  CHECK_THROWS_AS(elementary_symmetric(4, abc), flopcalc::DomainError);
  CHECK_THROWS_AS(elementary_symmetric(0, abc), flopcalc::DomainError);
}

TEST_CASE("sigma_k matches expansion of the product of (X + x_i)") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> val(-20, 20);
  ParamRing r({"X"});
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<MultiPoly> xs;
    for (std::size_t i = 0; i < n; ++i) { Rational q(val(rng), 1 + long(rng() % 3)); q.canonicalize(); xs.emplace_back(q); }
    MultiPoly prod(Rational(1));
    for (const auto& x : xs) prod *= r.var("X") + x;
    auto coeffs = prod.coefficients_in(0);
    for (std::size_t k = 1; k <= n; ++k) CHECK(coeffs[n - k] == elementary_symmetric(k, xs));
  }
}

TEST_CASE("polynomial text round trip") {
  ParamRing r = ring7();
  std::mt19937 rng(21);
  for (int i = 0; i < 100; ++i) {
    auto p = random_poly(rng, 7, 5, 4);
    CHECK(parse_poly(to_string(p, r), r) == p);
    RatFunc f(random_poly(rng, 7, 3, 2), random_nonzero(rng, 7, 2, 2));
    CHECK(parse_ratfunc(to_string(f, r), r) == f);
  }
  CHECK(to_string(P("1/2*t - 3"), r) == "1/2*t - 3");
  CHECK_THROWS_AS(parse_poly("q + 1", r), flopcalc::ParseError);
  CHECK_THROWS_AS(parse_poly("t +", r), flopcalc::ParseError);
  CHECK_THROWS_AS(parse_poly("t/0", r), flopcalc::ParseError);
}
