#include "flopcalc/pathalg/linear_span.hpp"

namespace flopcalc::pathalg {

Element LinearSpan::reduce(const Element& x) const {
  Element r = x;
  for (const auto& [p, c] : x.terms()) {
    auto it = basis_.find(p);
    if (it != basis_.end()) r -= it->second.scaled(c);
  }
  return r;
}

bool LinearSpan::insert(const Element& x) {
  Element v = reduce(x);
  if (v.is_zero()) return false;
  auto [lead, c] = v.leading(order_);
  v = v.scaled(RatFunc(1) / c);
  for (auto& [p, b] : basis_) {
    RatFunc k = b.coefficient(lead);
    if (!k.is_zero()) b -= v.scaled(k);
  }
  basis_.emplace(lead, std::move(v));
  return true;
}

std::vector<Element> LinearSpan::basis() const {
  std::vector<Element> out;
  for (const auto& [p, b] : basis_) out.push_back(b);
  return out;
}

namespace {

struct Row {
  Element v;
  std::vector<RatFunc> combo;
};

void subtract(Row& r, const Row& o, const RatFunc& k) {
  r.v -= o.v.scaled(k);
  for (std::size_t i = 0; i < r.combo.size(); ++i)
    if (!o.combo[i].is_zero()) r.combo[i] -= o.combo[i] * k;
}

void reduce_row(Row& r, const std::map<Path, Row>& pivots) {
  bool again = true;
  while (again && !r.v.is_zero()) {
    again = false;
    for (const auto& [p, c] : r.v.terms()) {
      auto it = pivots.find(p);
      if (it == pivots.end()) continue;
      RatFunc k = c;
      subtract(r, it->second, k);
      again = true;
      break;
    }
  }
}

}  // namespace

std::optional<std::vector<RatFunc>> express(const Element& target, const std::vector<Element>& spanning,
                                            const MonomialOrder& order) {
  std::size_t n = spanning.size();
  std::map<Path, Row> pivots;
  for (std::size_t i = 0; i < n; ++i) {
    Row r{spanning[i], std::vector<RatFunc>(n)};
    r.combo[i] = RatFunc(1);
    reduce_row(r, pivots);
    if (r.v.is_zero()) continue;
    auto [lead, c] = r.v.leading(order);
    RatFunc inv = RatFunc(1) / c;
    r.v = r.v.scaled(inv);
    for (auto& x : r.combo) x *= inv;
    pivots.emplace(lead, std::move(r));
  }
  Row t{target, std::vector<RatFunc>(n)};
  reduce_row(t, pivots);
  if (!t.v.is_zero()) return std::nullopt;
  for (auto& x : t.combo) x = -x;
  return t.combo;
}

}  // namespace flopcalc::pathalg
