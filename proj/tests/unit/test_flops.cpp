#include <random>

#include "doctest.h"
#include "flopcalc/coeff/ideal.hpp"
#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"
#include "flopcalc/flops/pipeline.hpp"
#include "flopcalc/flops/representation.hpp"
#include "flopcalc/flops/superpotential.hpp"
#include "flopcalc/pathalg/linear_span.hpp"
#include "support.hpp"

using namespace flopcalc;
using namespace flopcalc::flops;
using catalog::builtin;
using catalog::classifying_map;
using catalog::universal_flopping_algebra;
using coeff::parse_poly;
using pathalg::parse_element;

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(QMatrix m) {
  std::size_t r = 0, cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational k = m[i][c] / m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

QMatrix at(const Matrix& m, const std::vector<Rational>& point) {
  QMatrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(x.evaluate(point));
  }
  return out;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

QMatrix add(QMatrix a, const QMatrix& b, const Rational& k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += k * b[i][j];
  return a;
}

QMatrix scalar(std::size_t n, const Rational& c) {
  QMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = c;
  return m;
}

bool rows_in_span(const QMatrix& rel, const QMatrix& psi) {
  QMatrix both = psi;
  both.insert(both.end(), rel.begin(), rel.end());
  return rank(both) == rank(psi);
}

Matrix parse_matrix(const std::vector<std::vector<const char*>>& rows, const ParamRing& r) {
  Matrix m;
  for (const auto& row : rows) {
    m.emplace_back();
    for (const char* s : row) m.back().push_back(parse_poly(s, r));
  }
  return m;
}

Matrix scaled_identity_minus(const Matrix& C, const MultiPoly& x, int sign) {
  Matrix m = C;
  for (auto& row : m)
    for (auto& e : row) e = e * Rational(sign);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= x;
  return m;
}

}  // namespace

TEST_CASE("linear solve over the parameter field") {
  auto alg = builtin("length2");
  auto E = [&](const char* s) { return parse_element(s, alg.context); };
  auto k = pathalg::express(E("2*b + t*c"), {E("b"), E("c"), E("b + c")}, alg.order());
  REQUIRE(k);
  CHECK(E("b").scaled((*k)[0]) + E("c").scaled((*k)[1]) + E("b + c").scaled((*k)[2]) == E("2*b + t*c"));
  CHECK_FALSE(pathalg::express(E("d"), {E("b"), E("c")}, alg.order()));
  auto z = pathalg::express(Element(alg.context), {E("b")}, alg.order());
  REQUIRE(z);
  CHECK((*z)[0].is_zero());
}

TEST_CASE("commutative ideals") {
  ParamRing r({"x", "y"});
  auto P = [&](const char* s) { return parse_poly(s, r); };
  coeff::PolyIdeal I({P("x^2 - y"), P("y^2 - x")});
  CHECK(I.contains(P("x^4 - x")));
  CHECK(I.contains(P("x*y^3 - x^2*y")));
  CHECK_FALSE(I.contains(P("x - y")));
  CHECK(I.reduce(P("x^3")) == I.reduce(P("x*y")));
  coeff::PolyIdeal unit({P("x*y - 1"), P("x")});
  CHECK(unit.contains(P("1")));
  coeff::PolyIdeal zero;
  CHECK(zero.reduce(P("x + y")) == P("x + y"));
  // reduction is a normal form: reduce(p + q*g) == reduce(p)
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto p = testsupport::random_poly(rng, 2, 4, 4), q = testsupport::random_poly(rng, 2, 3, 3);
    CHECK(I.reduce(p + q * P("x^2 - y")) == I.reduce(p));
  }
}

TEST_CASE("length-1 hypersurface and factorization") {
  const auto& e = universal_flopping_algebra(1);
  FlopPipeline p(pipeline_input(e));
  const auto& h = p.hypersurface();
  // central fibre in the table variables
  auto at0 = coeff::substitute(h.equation, h.ring, h.ring, {{"t", MultiPoly()}});
  auto tv = coeff::substitute(at0, h.ring, h.ring,
                              {{"x", parse_poly("(x + y)/2", h.ring)}, {"y", parse_poly("(x - y)/2", h.ring)}});
  CHECK(tv == parse_poly("x*y - z^2", h.ring));
  auto mf = p.matrix_factorization();
  CHECK(mf.C.size() == 2);
  CHECK(is_zero(mf_residual(mf.C, mf.g)));
  // the equation holds in the algebra under a different arrow order
  auto alg = e.presentation;
  auto ctx = pathalg::make_context(alg.quiver(), alg.params(), {"a1", "A0", "A1", "a0"});
  PipelineInput in = pipeline_input(e);
  in.algebra = {ctx, {}, "reordered"};
  for (const auto& r : alg.relations) in.algebra.relations.push_back(pathalg::map_element(r, ctx));
  in.xprime = pathalg::map_element(e.xprime, ctx);
  in.y = pathalg::map_element(e.y, ctx);
  in.z = pathalg::map_element(e.z, ctx);
  for (auto& g : in.generators) g = pathalg::map_element(g, ctx);
  FlopPipeline q(in);
  CHECK(q.hypersurface().equation == h.equation);
  CHECK(q.to_element(h.equation).is_zero());
  CHECK_FALSE(q.to_element(h.equation + parse_poly("t*z", h.ring)).is_zero());
}

TEST_CASE("length-2 universal flop") {
  const auto& e = universal_flopping_algebra(2);
  FlopPipeline p(pipeline_input(e));
  const auto& h = p.hypersurface();
  CHECK(h.P == parse_poly("-t*(y + z - T0d + T0c + T0b + t^2/4)", h.ring));
  auto bc = nice_basis();
  const auto& r = bc.target;
  CHECK(apply(bc, h.equation, h.ring) == parse_poly("x^2 + u*y^2 + 2*v*y*z + w*z^2 + (u*w - v^2)*t^2", r));

  auto mf = p.matrix_factorization();
  CHECK(is_zero(mf_residual(mf.C, mf.g)));
  auto C = apply(bc, mf.C, mf.ring);
  auto x = parse_poly("x", r);
  auto psi = parse_matrix({{"-x - t*v", "y", "-z", "t"},
                           {"-u*y - 2*v*z", "-x + t*v", "t*u", "z"},
                           {"w*z", "-t*w", "-x - t*v", "y"},
                           {"-t*u*w", "-w*z", "-u*y - 2*v*z", "-x + t*v"}},
                          r);
  auto psi_plus = parse_matrix({{"-x + t*v", "-y", "z", "-t"},
                                {"2*v*z + u*y", "-x - t*v", "-t*u", "-z"},
                                {"-w*z", "t*w", "-x + t*v", "-y"},
                                {"t*u*w", "w*z", "2*v*z + u*y", "-x - t*v"}},
                               r);
  CHECK(scaled_identity_minus(C, x, 1) == psi);
  CHECK(scaled_identity_minus(C, x, -1) == psi_plus);
  auto prod = multiply(psi, psi_plus);
  auto f = apply(bc, h.equation, h.ring);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(prod[i][j] == (i == j ? f : MultiPoly()));
}

TEST_CASE("length-2 explicit module maps at random points of f") {
  auto bc = nice_basis();
  const auto& r = bc.target;
  auto M = [&](const std::vector<std::vector<const char*>>& rows) { return parse_matrix(rows, r); };
  auto psi = M({{"-x - t*v", "y", "-z", "t"},
                {"-u*y - 2*v*z", "-x + t*v", "t*u", "z"},
                {"w*z", "-t*w", "-x - t*v", "y"},
                {"-t*u*w", "-w*z", "-u*y - 2*v*z", "-x + t*v"}});
  auto a = M({{"1", "0", "0", "0"}});
  auto A = M({{"t"}, {"z"}, {"y"}, {"x + t*v"}});
  auto b = M({{"0", "1", "0", "0"}, {"-u", "0", "0", "0"}, {"2*v", "0", "0", "-1"}, {"0", "2*v", "u", "0"}});
  auto c = M({{"0", "0", "1", "0"}, {"0", "0", "0", "1"}, {"-w", "0", "0", "0"}, {"0", "-w", "0", "0"}});
  auto d = M({{"-t/2", "-1", "-1", "0"},
              {"u - z", "t/2", "0", "-1"},
              {"w - 2*v - y", "0", "t/2", "1"},
              {"0", "w - 2*v - y", "-u + z", "-t/2"}});
  const auto& e = universal_flopping_algebra(2);
  FlopPipeline p(pipeline_input(e));
  auto f = apply(bc, p.hypersurface().equation, p.hypersurface().ring);

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  auto rnd = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  int points = 0;
  while (points < 25) {
    // x, y, z, t, u, v, w with u solved from f = 0
    std::vector<Rational> pt{rnd(), rnd(), rnd(), rnd(), Rational(0), rnd(), rnd()};
    Rational lead = pt[1] * pt[1] + pt[6] * pt[3] * pt[3];
    if (lead == 0) continue;
    pt[4] = -(pt[0] * pt[0] + 2 * pt[5] * pt[1] * pt[2] + pt[6] * pt[2] * pt[2] - pt[5] * pt[5] * pt[3] * pt[3]) / lead;
    REQUIRE(f.evaluate(pt) == 0);
    ++points;
    auto Psi = at(psi, pt), B = at(b, pt), Cc = at(c, pt), D = at(d, pt), Aa = mul(at(A, pt), at(a, pt));
    CHECK(rank(Psi) < 4);
    Rational t = pt[3], T0b = -pt[4], T0c = -pt[6];
    Rational T0d = pt[1] + pt[2] - pt[4] - pt[6] + t * t / 4 + 2 * pt[5];
    CHECK(mul(at(a, pt), at(A, pt))[0][0] == t);
    CHECK(rows_in_span(add(mul(B, B), scalar(4, T0b), -1), Psi));
    CHECK(rows_in_span(add(mul(Cc, Cc), scalar(4, T0c), -1), Psi));
    CHECK(rows_in_span(add(mul(D, D), scalar(4, T0d), -1), Psi));
    CHECK(rows_in_span(add(add(add(add(Aa, B), Cc), D), scalar(4, t / 2), -1), Psi));
    for (const auto* m : {&B, &Cc, &D, &Aa}) CHECK(rows_in_span(mul(Psi, *m), Psi));
    for (const auto& row : mul(Psi, at(A, pt))) CHECK(row[0] == 0);
  }
  // off the hypersurface the matrix is invertible
  std::vector<Rational> off{Rational(1), Rational(2), Rational(3), Rational(1), Rational(1), Rational(0), Rational(1)};
  CHECK(f.evaluate(off) != 0);
  CHECK(rank(at(psi, off)) == 4);
}

TEST_CASE("length-3 explicit flop") {
  const auto& e = universal_flopping_algebra(3);
  FlopPipeline p(specialize(pipeline_input(e), classifying_map("length3")));
  const auto& h = p.hypersurface();
  const auto& r = h.ring;
  CHECK(h.P == parse_poly("T*y + z^2", r));
  CHECK(h.equation ==
        -parse_poly("-x^2-T^5 + 4*T^3*y + T^2*z^2 + 1/4*T^2*y^2 + 1/2*T*z^2*y + 1/4*z^4 - y^3", r));
  auto mf = p.matrix_factorization();
  CHECK(is_zero(mf_residual(mf.C, mf.g)));
  auto reference = parse_matrix(
      {{"1/2*(T*y - z^2)", "-T^2", "T^2 - y", "-y", "-z", "-T"},
       {"-T*y + z*y", "-1/2*(T*y + z^2)", "-T^2 + T*z", "T^2", "y", "-z"},
       {"-T^3 - T^2*z", "T^3 - T*y + z*y", "-1/2*(T*y - z^2)", "T*z", "-T^2", "y"},
       {"-T^3 + y^2", "T*y", "T*z + T*y", "-1/2*(T*y + z^2)", "-T^2", "-y"},
       {"-T^2*z - T^2*y", "T^3 + T^2*z - y^2", "-T^3 - T*y", "T^3 - T*y + z*y", "1/2*(T*y + z^2)", "T^2"},
       {"-T^3*z - T^2*y + T*z*y - z^2*y", "T^4 - T^2*z - 2*T^2*y + T*z*y", "T^3 - y^2", "-T^3",
        "-T^3 + T*y - z*y", "1/2*(T*y + z^2)"}},
      r);
  CHECK(apply(BaseChange{r, {{"z", "-z"}}}, mf.C, r) == reference);
  CHECK_FALSE(mf.C == reference);
  CHECK(is_zero(mf_residual(reference, mf.g)));

  FlopPipeline m(specialize(pipeline_input(e), classifying_map("length3-t1")));
  CHECK_FALSE(m.hypersurface().equation == h.equation);
}

TEST_CASE("specialization") {
  auto l2 = builtin("length2");
  auto nccr = specialize(l2, classifying_map("laufer"));
  auto expected = builtin("laufer-nccr");
  REQUIRE(nccr.relations.size() == expected.relations.size());
  for (std::size_t i = 0; i < nccr.relations.size(); ++i)
    CHECK(to_string(nccr.relations[i]) == to_string(expected.relations[i]));

  std::map<std::string, MultiPoly> id;
  for (const auto& n : l2.params().names()) id[n] = l2.params().var(n);
  auto same = specialize(l2, l2.params(), id);
  CHECK(same == l2);

  // length 4 at T^x_i = 0 (i > 0), T^x_0 = T, t = 0
  auto l4 = specialize(builtin("length4"), classifying_map("length4"));
  auto E = [&](const char* s) { return parse_element(s, l4.context); };
  auto has = [&](const pathalg::Element& x) {
    return std::find(l4.relations.begin(), l4.relations.end(), x) != l4.relations.end();
  };
  CHECK(has(E("b^2 - T*e7")));
  CHECK(has(E("c^4 - T*e7")));
  CHECK(has(E("A*a - d^3 + T*e7")));

  // the Laufer equation from the nice-basis form
  auto bc = nice_basis();
  auto f = parse_poly("x^2 + u*y^2 + 2*v*y*z + w*z^2 + (u*w - v^2)*t^2", bc.target);
  auto g = coeff::substitute(f, bc.target, bc.target,
                             {{"w", parse_poly("-t", bc.target)}, {"u", parse_poly("y", bc.target)}, {"v", MultiPoly()}});
  CHECK(g == parse_poly("x^2 + y^3 - t*z^2 - y*t^3", bc.target));
}

TEST_CASE("specialization commutes with the pipeline") {
  const auto& e = universal_flopping_algebra(2);
  const auto& map = classifying_map("laufer");
  auto in = specialize(pipeline_input(e), map);
  in.names = {"X", "Y", "Z"};
  FlopPipeline spec(in);
  FlopPipeline uni(pipeline_input(e));
  const auto& hu = uni.hypersurface();
  const auto& hs = spec.hypersurface();
  auto images = map.images;
  for (auto& [k, v] : images) v = coeff::rename_into(v, map.target, hs.ring);
  images["x"] = hs.ring.var("X");
  images["y"] = hs.ring.var("Y");
  images["z"] = hs.ring.var("Z");
  auto pushed = coeff::substitute(hu.equation, hu.ring, hs.ring, images);
  CHECK(spec.to_element(pushed).is_zero());
  CHECK(spec.to_element(hs.equation).is_zero());
  auto mf = spec.matrix_factorization();
  CHECK(is_zero(mf_residual(mf.C, mf.g)));
}

TEST_CASE("cyclic derivatives") {
  auto laufer = builtin("laufer");
  auto E = [&](const char* s) { return parse_element(s, laufer.context); };
  CHECK(cyclic_derivative(E("c*b^2"), "c") == E("b^2"));
  CHECK(cyclic_derivative(E("b^2"), "b") == E("2*b"));
  CHECK(cyclic_derivative(E("b"), "b") == E("e4"));
  auto phi = E("1/2*a*A*a*A - a*c^2*A - c*b^2 + 1/4*c^4");
  CHECK(cyclic_derivative(phi, "b") == E("-(b*c + c*b)"));
  CHECK(cyclic_derivative(phi, "a") == E("A*a*A - c^2*A"));
  CHECK_THROWS_AS(cyclic_derivative(E("a*c"), "a"), DomainError);
  CHECK_THROWS_AS(cyclic_derivative(phi, "q"), DomainError);

  std::mt19937 rng(3);
  std::vector<const char*> words{"a*A", "c*b*c", "b*c^2", "a*c*A", "c^3*b", "A*a*b"};
  std::uniform_int_distribution<int> pick(0, int(words.size()) - 1), k(-5, 5);
  for (int i = 0; i < 20; ++i) {
    auto w1 = E(words[std::size_t(pick(rng))]), w2 = E(words[std::size_t(pick(rng))]);
    Rational k1(k(rng)), k2(k(rng));
    for (const char* x : {"a", "A", "b", "c"}) {
      CHECK(cyclic_derivative(w1.scaled(k1) + w2.scaled(k2), x) ==
            cyclic_derivative(w1, x).scaled(k1) + cyclic_derivative(w2, x).scaled(k2));
    }
  }
  // rotation invariance
  CHECK(cyclic_derivative(E("c*b*c*b*b"), "c") == cyclic_derivative(E("b*c*b*b*c"), "c"));
  CHECK(cyclic_derivative(E("a*c*A"), "c") == cyclic_derivative(E("A*a*c"), "c"));
}

TEST_CASE("superpotentials") {
  for (const auto& name : catalog::superpotential_names()) {
    CAPTURE(name);
    const auto& s = catalog::superpotential(name);
    auto alg = builtin(s.algebra);
    auto phi = rescale(parse_element(s.phi, alg.context), s.rescaling);
    auto rep = verify_superpotential(alg, phi);
    for (const auto& l : rep.lines) {
      CAPTURE(l.name);
      CHECK(l.ok);
    }
  }
  const auto& s3 = catalog::superpotential("length3");
  auto alg3 = builtin(s3.algebra);
  CHECK_FALSE(verify_superpotential(alg3, parse_element(s3.phi, alg3.context)).ok());

  auto laufer = builtin("laufer");
  CHECK_FALSE(verify_superpotential(laufer, parse_element("a*A*a*A - a*c^2*A - c*b^2 + 1/4*c^4", laufer.context)).ok());

  auto free = pathalg::parse_presentation("vertices: 1\narrows: x: 1 -> 1, y: 1 -> 1\nrelations:\n");
  CHECK(verify_superpotential(free, Element(free.context)).ok());
}

TEST_CASE("chart representations") {
  auto l2 = builtin("length2");
  for (const auto& name : builtin_representation_names()) {
    CAPTURE(name);
    auto rep = builtin_representation(name);
    auto report = verify_representation(l2, rep);
    CHECK(report.lines.size() == 5);
    for (const auto& l : report.lines) {
      CAPTURE(l.name);
      CAPTURE(l.detail);
      CHECK(l.ok);
    }
    CHECK(parse_representation(print_representation(rep)).arrows == rep.arrows);
  }
  // generators of R on the charts
  const auto& e = universal_flopping_algebra(2);
  auto check_gens = [&](const char* chart, const char* x, const char* y, const char* z) {
    auto rep = builtin_representation(chart);
    coeff::PolyIdeal I(rep.ideal);
    auto val = [&](const Element& el) { return evaluate(el, rep, I)[0][0]; };
    CHECK(val(e.xprime) == I.reduce(parse_poly(x, rep.ring)));
    CHECK(val(e.y) == I.reduce(parse_poly(y, rep.ring)));
    CHECK(val(e.z) == I.reduce(parse_poly(z, rep.ring)));
  };
  check_gens("U0", "c00*(c10 + d10 + T0b) + c10*t", "-c01*(c10 + d10 + T0b) + c00*t", "-(c10 + d10 + T0b)");
  check_gens("U1", "-B00*(B10 + D10 + T0c) + B01*t*T0c", "-(B10 + D10 + T0c)", "-B01*(B10 + D10 + T0c) + B00*t");

  auto broken = builtin_representation("U0");
  broken.arrows["c"][1][1] = parse_poly("c00", broken.ring);
  CHECK_FALSE(verify_representation(l2, broken).ok());
  auto bad_shape = builtin_representation("U0");
  bad_shape.arrows["a"] = {{MultiPoly(1)}};
  CHECK_THROWS_AS(verify_representation(l2, bad_shape), DomainError);

  auto l1 = builtin("length1");
  auto a1 = parse_representation("ring: t\ndims: 0 = 1, 1 = 1\na0 = [1]\nA0 = [t]\na1 = [0]\nA1 = [0]\n");
  CHECK(verify_representation(l1, a1).ok());
  auto d4 = builtin("preprojective-D4");
  auto zero = parse_representation("ring: s\ndims: 0 = 1, 1 = 1, 2 = 1, 3 = 1, 4 = 1\n"
                                   "a0 = [0]\na1 = [0]\na2 = [0]\na3 = [0]\nA0 = [0]\nA1 = [0]\nA2 = [0]\nA3 = [0]\n");
  CHECK(verify_representation(d4, zero).ok());
  CHECK_THROWS_AS(parse_representation("dims: 0 = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_representation("ring: t\na = [1, q]\n"), ParseError);
}
