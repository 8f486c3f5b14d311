#include "flopcalc/coeff/ideal.hpp"

#include <algorithm>

#include "flopcalc/errors.hpp"

namespace flopcalc::coeff {

namespace {

MultiPoly reduce_by(const MultiPoly& p, const std::vector<MultiPoly>& g) {
  MultiPoly rest = p, out;
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    bool hit = false;
    for (const auto& h : g) {
      const auto& lh = h.leading_term();
      if (!lh.mono.divides(lt.mono)) continue;
      rest -= h.mul_monomial(lt.mono / lh.mono, lt.coeff / lh.coeff);
      hit = true;
      break;
    }
    if (!hit) {
      out += MultiPoly::monomial(lt.mono, lt.coeff);
      rest -= MultiPoly::monomial(lt.mono, lt.coeff);
    }
  }
  return out;
}

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g) {
  const auto &lf = f.leading_term(), &lg = g.leading_term();
  auto l = Monomial::lcm(lf.mono, lg.mono);
  return f.mul_monomial(l / lf.mono, 1 / lf.coeff) - g.mul_monomial(l / lg.mono, 1 / lg.coeff);
}

}  // namespace

PolyIdeal::PolyIdeal(std::vector<MultiPoly> generators, std::size_t max_pairs) {
  std::vector<MultiPoly> g;
  for (auto& p : generators)
    if (!p.is_zero()) g.push_back(p.monic());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::size_t used = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const auto &mi = g[i].leading_term().mono, &mj = g[j].leading_term().mono;
    if (Monomial::gcd(mi, mj).is_one()) continue;
    if (++used > max_pairs) throw BudgetExceeded("commutative Groebner basis did not close", used);
    auto r = reduce_by(spoly(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // minimal, then reduced
  std::vector<MultiPoly> min;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto &a = g[j].leading_term().mono, &b = g[i].leading_term().mono;
      redundant = a.divides(b) && (!(a == b) || j < i);
    }
    if (!redundant) min.push_back(g[i]);
  }
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    auto lt = min[i].leading_term();
    auto tail = reduce_by(min[i] - MultiPoly::monomial(lt.mono, lt.coeff), others);
    min[i] = MultiPoly::monomial(lt.mono, lt.coeff) + tail;
  }
  std::sort(min.begin(), min.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return grlex_compare(a.leading_term().mono, b.leading_term().mono) < 0;
  });
  basis_ = std::move(min);
}

MultiPoly PolyIdeal::reduce(const MultiPoly& p) const { return reduce_by(p, basis_); }

}  // namespace flopcalc::coeff
