#pragma once

#include <random>

#include "flopcalc/coeff/multipoly.hpp"
#include "flopcalc/pathalg/presentation.hpp"

namespace testsupport {

using flopcalc::coeff::Monomial;
using flopcalc::coeff::MultiPoly;
using flopcalc::coeff::Rational;
using flopcalc::coeff::RatFunc;
using flopcalc::pathalg::AlgebraPresentation;
using flopcalc::pathalg::Element;
using flopcalc::pathalg::VertexId;

inline MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coeff(-9, 9), var(0, int(nvars) - 1), deg(0, maxdeg), den(1, 4);
  std::vector<MultiPoly::Term> out;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) m = m * Monomial::variable(std::size_t(var(rng)));
    Rational c(coeff(rng), den(rng));
    c.canonicalize();
    out.push_back({m, c});
  }
  return MultiPoly::from_terms(std::move(out));
}

inline MultiPoly random_nonzero(std::mt19937& rng, std::size_t nvars, int terms, int maxdeg) {
  while (true) {
    auto p = random_poly(rng, nvars, terms, maxdeg);
    if (!p.is_zero()) return p;
  }
}

/// Random walks from one random vertex with small integer times parameter coefficients.
inline Element random_element(std::mt19937& rng, const AlgebraPresentation& alg, int max_deg, int terms) {
  const auto& ord = alg.order();
  const auto& q = alg.quiver();
  std::uniform_int_distribution<std::size_t> pick(0, q.arrow_count() - 1);
  std::uniform_int_distribution<int> coef(-5, 5), par(0, int(alg.params().size()));
  Element e(alg.context);
  VertexId s = q.vertices()[std::uniform_int_distribution<std::size_t>(0, q.vertices().size() - 1)(rng)];
  for (int i = 0; i < terms; ++i) {
    flopcalc::pathalg::Path p = flopcalc::pathalg::idempotent(s);
    int target_len = std::uniform_int_distribution<int>(0, max_deg)(rng);
    for (int tries = 0; tries < 50 && ord.degree(p) < target_len; ++tries) {
      auto n = flopcalc::pathalg::compose(p, flopcalc::pathalg::arrow_path(q, pick(rng)));
      if (n && ord.degree(*n) <= max_deg) p = *n;
    }
    RatFunc c(coef(rng));
    int k = par(rng);
    if (k < int(alg.params().size())) c = c * RatFunc(MultiPoly::variable(std::size_t(k)));
    e.add_term(p, c);
  }
  return e;
}

}  // namespace testsupport
