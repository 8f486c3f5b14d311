#include "flopcalc/coeff/multipoly.hpp"

#include <algorithm>
#include <map>

#include "flopcalc/errors.hpp"

namespace flopcalc::coeff {

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return grlex_compare(a.mono, b.mono) > 0;
}

void canonicalize(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (c != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::variable(std::size_t index) {
  return monomial(Monomial::variable(index), Rational(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational MultiPoly::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::size_t MultiPoly::support_bound() const {
  std::size_t b = 0;
  for (const auto& t : terms_) b = std::max(b, t.mono.support_bound());
  return b;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grlex_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  return *this += -o;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<MultiPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  return *this = *this * o;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  MultiPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return *this * inv;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0, n = t.mono.support_bound(); i < n; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (i >= point.size()) throw DomainError("evaluation point too short");
      for (unsigned k = 0; k < e; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::substitute(std::span<const std::optional<MultiPoly>> images) const {
  std::map<std::pair<std::size_t, unsigned>, MultiPoly> powers;
  auto power = [&](std::size_t var, unsigned e) -> const MultiPoly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, images[var]->pow(e)).first->second;
  };
  std::vector<Term> acc;
  MultiPoly total;
  for (const auto& t : terms_) {
    Monomial kept;
    MultiPoly factor(t.coeff);
    for (std::size_t i = 0, n = t.mono.support_bound(); i < n; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (i < images.size() && images[i]) {
        factor *= power(i, e);
      } else {
        kept = kept * Monomial::variable(i, e);
      }
    }
    if (!kept.is_one()) factor = factor.mul_monomial(kept, Rational(1));
    for (auto& s : factor.terms_) acc.push_back(std::move(s));
  }
  return from_terms(std::move(acc));
}

MultiPoly MultiPoly::evaluate_var(std::size_t var, const Rational& value) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(var);
    Rational c = t.coeff;
    for (unsigned k = 0; k < e; ++k) c *= value;
    if (c != 0) acc.push_back({t.mono.with_exponent(var, 0), c});
  }
  return from_terms(std::move(acc));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) buckets[t.mono.exponent(var)].push_back({t.mono.with_exponent(var, 0), t.coeff});
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    MultiPoly p;
    p.terms_ = std::move(b);  // order among terms is preserved after removing a shared variable
    std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var) {
  std::vector<Term> acc;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_) acc.push_back({t.mono * Monomial::variable(var, unsigned(k)), t.coeff});
  return from_terms(std::move(acc));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::size_t MultiPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003 + t.mono.hash();
    h ^= mpz_get_ui(t.coeff.get_num_mpz_t()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return MultiPoly();
  if (b.size() == 1) {
    const auto& lt = b.leading_term();
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / lt.mono, t.coeff / lt.coeff});
    }
    MultiPoly q;
    q = MultiPoly::from_terms(std::move(out));
    return q;
  }
  const auto& lb = b.leading_term();
  MultiPoly r = a;
  std::vector<MultiPoly::Term> q;
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lr.mono / lb.mono;
    Rational c = lr.coeff / lb.coeff;
    q.push_back({m, c});
    r -= b.mul_monomial(m, c);
  }
  return MultiPoly::from_terms(std::move(q));
}

namespace {

using Univariate = std::vector<Rational>;  // ascending powers

void trim(Univariate& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

std::size_t univariate_gcd_degree(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

Univariate image(const MultiPoly& p, std::size_t var, const std::vector<Rational>& point) {
  Univariate u(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0, n = t.mono.support_bound(); i < n; ++i) {
      if (i == var) continue;
      for (unsigned k = 0, e = t.mono.exponent(i); k < e; ++k) v *= point[i];
    }
    u[t.mono.exponent(var)] += v;
  }
  return u;
}

std::vector<std::size_t> support(const MultiPoly& p) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0, n = p.support_bound(); i < n; ++i)
    if (p.contains_var(i)) vars.push_back(i);
  return vars;
}

MultiPoly gcd_core(const MultiPoly& a, const MultiPoly& b);

MultiPoly gcd_list(MultiPoly g, const std::vector<MultiPoly>& polys) {
  for (const auto& c : polys) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) return MultiPoly(Rational(1));
  }
  return g;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  return gcd_list(MultiPoly(), p.coefficients_in(var));
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw DomainError("internal: inexact division in gcd");
  return *q;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  std::vector<MultiPoly> ac = a.coefficients_in(var);
  std::vector<MultiPoly> bc = b.coefficients_in(var);
  const std::size_t db = bc.size() - 1;
  const MultiPoly& lb = bc.back();
  while (!ac.empty() && ac.size() - 1 >= db) {
    std::size_t da = ac.size() - 1;
    MultiPoly la = ac.back();
    for (auto& c : ac) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) ac[i + da - db] -= la * bc[i];
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
  }
  return MultiPoly::from_coefficients(ac, var);
}

/// Upper bound for deg_var gcd(a, b) from univariate images.
unsigned image_degree_bound(const MultiPoly& a, const MultiPoly& b, std::size_t var, std::size_t nvars) {
  unsigned best = std::min(a.degree_in(var), b.degree_in(var));
  auto la = a.coefficients_in(var).back();
  auto lb = b.coefficients_in(var).back();
  std::vector<Rational> point(nvars);
  unsigned seed = 7;
  int good = 0;
  for (int attempt = 0; attempt < 6 && good < 2 && best > 0; ++attempt) {
    for (std::size_t i = 0; i < nvars; ++i) {
      seed = seed * 1103515245u + 12345u;
      point[i] = Rational(long((seed >> 16) % 89) + 3);
    }
    if (la.evaluate(point) == 0 || lb.evaluate(point) == 0) continue;
    ++good;
    best = std::min<unsigned>(best, unsigned(univariate_gcd_degree(image(a, var, point), image(b, var, point))));
  }
  return best;
}

MultiPoly primitive_prs(MultiPoly a, MultiPoly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return b.monic();
    if (r.degree_in(var) == 0) return MultiPoly(Rational(1));
    a = std::move(b);
    b = exact(r, content_in(r, var));
  }
}

MultiPoly gcd_core(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));
  MultiPoly am = a.monic(), bm = b.monic();
  if (am == bm) return am;
  auto va = support(a), vb = support(b);
  for (std::size_t v : va)
    if (!b.contains_var(v)) return gcd_list(b.monic(), a.coefficients_in(v));
  for (std::size_t v : vb)
    if (!a.contains_var(v)) return gcd_list(a.monic(), b.coefficients_in(v));
  std::size_t nvars = std::max(a.support_bound(), b.support_bound());
  std::size_t chosen = nvars;
  unsigned chosen_bound = ~0u;
  for (std::size_t v : va) {
    unsigned bound = image_degree_bound(a, b, v, nvars);
    if (bound == 0) {
      return gcd(content_in(a, v), content_in(b, v));
    }
    if (bound < chosen_bound) {
      chosen_bound = bound;
      chosen = v;
    }
  }
  MultiPoly ca = content_in(a, chosen), cb = content_in(b, chosen);
  MultiPoly gc = gcd(ca, cb);
  MultiPoly pg = primitive_prs(exact(a, ca), exact(b, cb), chosen);
  return (gc * pg).monic();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial mg = Monomial::gcd(ma, mb);
  MultiPoly ar = ma.is_one() ? a : *divide_exact(a, MultiPoly::monomial(ma, Rational(1)));
  MultiPoly br = mb.is_one() ? b : *divide_exact(b, MultiPoly::monomial(mb, Rational(1)));
  MultiPoly g = gcd_core(ar, br);
  if (!mg.is_one()) g = g.mul_monomial(mg, Rational(1));
  return g.monic();
}

MultiPoly elementary_symmetric(std::size_t k, std::span<const MultiPoly> vars) {
  if (k < 1 || k > vars.size()) throw DomainError("elementary_symmetric: k out of range");
  std::vector<MultiPoly> e(k + 1);
  e[0] = MultiPoly(Rational(1));
  for (const auto& v : vars)
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  return e[k];
}

}  // namespace flopcalc::coeff
