#include "flopcalc/pathalg/element.hpp"

#include <algorithm>
#include <sstream>

#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"

namespace flopcalc::pathalg {

bool same_algebra(const ContextPtr& a, const ContextPtr& b) {
  if (a == b || !a || !b) return true;
  return a->quiver == b->quiver && a->params == b->params;
}

Element Element::path(ContextPtr ctx, const Path& p, const RatFunc& c) {
  Element e(std::move(ctx));
  e.add_term(p, c);
  return e;
}

Element Element::arrow(ContextPtr ctx, const std::string& name) {
  auto i = ctx->quiver.arrow_index(name);
  if (!i) throw DomainError("unknown arrow '" + name + "'");
  Path p = arrow_path(ctx->quiver, *i);
  return path(std::move(ctx), p);
}

Element Element::idempotent(ContextPtr ctx, VertexId v) {
  if (!ctx->quiver.has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
  return path(std::move(ctx), pathalg::idempotent(v));
}

Element Element::scalar(ContextPtr ctx, const RatFunc& c) {
  Element e(ctx);
  for (auto v : ctx->quiver.vertices()) e.add_term(pathalg::idempotent(v), c);
  return e;
}

RatFunc Element::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? RatFunc() : it->second;
}

void Element::add_term(const Path& p, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::pair<Path, RatFunc> Element::leading(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of zero element");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return *best;
}

int Element::degree(const MonomialOrder& order) const {
  int d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, order.degree(p));
  return d;
}

std::optional<std::pair<VertexId, VertexId>> Element::endpoints() const {
  if (terms_.empty()) return std::nullopt;
  auto first = std::make_pair(terms_.begin()->first.source, terms_.begin()->first.target);
  for (const auto& [p, c] : terms_)
    if (p.source != first.first || p.target != first.second) return std::nullopt;
  return first;
}

void Element::check(const Element& o) const {
  if (!same_algebra(ctx_, o.ctx_)) throw DomainError("elements belong to different algebras");
}

Element Element::operator-() const {
  Element r(ctx_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  check(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.check(b);
  Element r(a.ctx_ ? a.ctx_ : b.ctx_);
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_)
      if (auto pq = compose(p, q)) r.add_term(*pq, c * d);
  return r;
}

Element Element::scaled(const RatFunc& c) const {
  Element r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [p, d] : terms_) r.terms_.emplace(p, d * c);
  return r;
}

Element Element::pow(unsigned e) const {
  if (e == 0) return Element::scalar(ctx_, RatFunc(1));
  Element r = *this;
  for (unsigned i = 1; i < e; ++i) r = r * *this;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  return same_algebra(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

std::string coefficient_string(const RatFunc& c, const ParamRing& ring) {
  std::string s = coeff::to_string(c, ring);
  if (!c.is_polynomial() || c.num().size() > 1) return "(" + s + ")";
  return s;
}

std::string to_string(const Element& e) {
  if (!e.context()) return "0";
  return to_string(e, e.context()->display_order);
}

std::string to_string(const Element& e, const MonomialOrder& order) {
  if (e.is_zero()) return "0";
  const auto& ctx = *e.context();
  std::vector<std::pair<Path, RatFunc>> terms(e.terms().begin(), e.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms) {
    std::string ps = path_string(ctx.quiver, p);
    bool single = c.is_polynomial() && c.num().size() == 1;
    bool neg = single && c.num().leading_coeff() < 0;
    RatFunc a = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (a.is_one()) {
      os << ps;
    } else {
      os << coefficient_string(a, ctx.params) << '*' << ps;
    }
  }
  return os.str();
}

}  // namespace flopcalc::pathalg
