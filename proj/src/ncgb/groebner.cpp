#include "flopcalc/ncgb/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "flopcalc/errors.hpp"

namespace flopcalc::ncgb {

using pathalg::Quiver;

void Budget::charge(std::uint64_t n) {
  used += n;
  if (used > limit) throw BudgetExceeded("reduction budget of " + std::to_string(limit) + " steps exceeded", used);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FLOPCALC_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

namespace {

struct Desc {
  const MonomialOrder* ord;
  bool operator()(const Path& a, const Path& b) const { return ord->compare(a, b) > 0; }
};

using Work = std::map<Path, RatFunc, Desc>;
using Poly = std::vector<std::pair<Path, RatFunc>>;

void accumulate(Work& w, const Path& p, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = w.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) w.erase(it);
  }
}

Path slice(const Quiver& q, const Path& p, std::size_t i, std::size_t j) {
  if (i == j) {
    VertexId v = i == 0 ? p.source : q.arrow(p.letter(i - 1)).target;
    return pathalg::idempotent(v);
  }
  return Path{q.arrow(p.letter(i)).source, q.arrow(p.letter(j - 1)).target, p.word.substr(i, j - i)};
}

Path join(const Path& a, const Path& b, const Path& c) { return *pathalg::compose(*pathalg::compose(a, b), c); }

}  // namespace

struct GroebnerBasis::Impl {
  AlgebraPresentation alg;
  MonomialOrder order;
  Desc desc;
  int degree = 0;

  struct RuleRec {
    Path lead;
    Poly tail;
    int deg;
    bool alive;
  };
  std::vector<RuleRec> rules;
  std::set<VertexId> dead;

  struct Node {
    std::vector<std::pair<std::uint8_t, int>> next;
    int rule = -1;
  };
  std::vector<Node> trie{Node{}};

  struct Item {
    int deg;
    Path word;
    std::uint64_t seq;
    bool is_pair;
    std::size_t i = 0, j = 0, k = 0;
    Poly poly;
  };
  std::vector<Item> items;
  std::uint64_t seq = 0;
  std::vector<std::size_t> pending;  // items above the current degree

  struct ItemCmp {
    const Impl* self;
    bool operator()(std::size_t a, std::size_t b) const {
      const Item& x = self->items[a];
      const Item& y = self->items[b];
      if (x.deg != y.deg) return x.deg > y.deg;
      int c = self->order.compare(x.word, y.word);
      if (c != 0) return c > 0;
      return x.seq > y.seq;
    }
  };

  Impl(const AlgebraPresentation& a, MonomialOrder o) : alg(a), order(std::move(o)), desc{&order} {}
  Impl(const Impl& o)
      : alg(o.alg), order(o.order), desc{&order}, degree(o.degree), rules(o.rules), dead(o.dead), trie(o.trie),
        items(o.items), seq(o.seq), pending(o.pending) {}

  const Quiver& quiver() const { return alg.quiver(); }

  bool touches_dead(const Path& p) const {
    if (dead.empty()) return false;
    if (dead.count(p.source) || dead.count(p.target)) return true;
    for (std::size_t i = 0; i < p.length(); ++i)
      if (dead.count(quiver().arrow(p.letter(i)).target)) return true;
    return false;
  }

  /// First (rule, position) whose lead occurs in p.
  std::optional<std::pair<int, std::size_t>> find(const Path& p) const {
    const std::string& w = p.word;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int node = 0;
      for (std::size_t j = i; j < w.size(); ++j) {
        int nxt = -1;
        for (auto [c, n] : trie[node].next)
          if (c == std::uint8_t(w[j])) {
            nxt = n;
            break;
          }
        if (nxt < 0) break;
        node = nxt;
        if (trie[node].rule >= 0) return std::make_pair(trie[node].rule, i);
      }
    }
    return std::nullopt;
  }

  void trie_insert(const std::string& w, int rule) {
    int node = 0;
    for (char ch : w) {
      int nxt = -1;
      for (auto [c, n] : trie[node].next)
        if (c == std::uint8_t(ch)) nxt = n;
      if (nxt < 0) {
        nxt = int(trie.size());
        trie[node].next.push_back({std::uint8_t(ch), nxt});
        trie.emplace_back();
      }
      node = nxt;
    }
    trie[node].rule = rule;
  }

  void trie_erase(const std::string& w) {
    int node = 0;
    for (char ch : w)
      for (auto [c, n] : trie[node].next)
        if (c == std::uint8_t(ch)) {
          node = n;
          break;
        }
    trie[node].rule = -1;
  }

  Poly reduce(Work& w, Budget& budget) const {
    Poly out;
    while (!w.empty()) {
      auto it = w.begin();
      Path p = it->first;
      RatFunc c = std::move(it->second);
      w.erase(it);
      if (touches_dead(p)) continue;
      auto hit = find(p);
      if (!hit) {
        out.emplace_back(std::move(p), std::move(c));
        continue;
      }
      budget.charge();
      const RuleRec& r = rules[hit->first];
      Path u = slice(quiver(), p, 0, hit->second);
      Path v = slice(quiver(), p, hit->second + r.lead.length(), p.length());
      for (const auto& [tp, tc] : r.tail) accumulate(w, join(u, tp, v), c * tc);
    }
    return out;
  }

  Work work() const { return Work(desc); }

  void push(Item it) {
    it.seq = seq++;
    items.push_back(std::move(it));
    pending.push_back(items.size() - 1);
  }

  void push_poly(Poly p) {
    if (p.empty()) return;
    Item it;
    it.deg = order.degree(p.front().first);
    it.word = p.front().first;
    it.is_pair = false;
    it.poly = std::move(p);
    push(std::move(it));
  }

  void add_pairs(std::size_t n) {
    const std::string& ln = rules[n].lead.word;
    if (ln.empty()) return;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (!rules[r].alive) continue;
      const std::string& lr = rules[r].lead.word;
      if (lr.empty()) continue;
      std::size_t m = std::min(lr.size(), ln.size());
      for (std::size_t k = 1; k < m; ++k) {
        // suffix of lr == prefix of ln
        if (lr.compare(lr.size() - k, k, ln, 0, k) == 0) add_pair(r, n, k);
        if (r != n && ln.compare(ln.size() - k, k, lr, 0, k) == 0) add_pair(n, r, k);
      }
    }
  }

  void add_pair(std::size_t i, std::size_t j, std::size_t k) {
    const Path& li = rules[i].lead;
    const Path& lj = rules[j].lead;
    Path w = *pathalg::compose(li, slice(quiver(), lj, k, lj.length()));
    Item it;
    it.deg = order.degree(w);
    it.word = w;
    it.is_pair = true;
    it.i = i;
    it.j = j;
    it.k = k;
    push(std::move(it));
  }

  Poly spoly(const Item& it) const {
    const RuleRec& ri = rules[it.i];
    const RuleRec& rj = rules[it.j];
    Path x = slice(quiver(), ri.lead, 0, ri.lead.length() - it.k);
    Path y = slice(quiver(), rj.lead, it.k, rj.lead.length());
    Path ex = pathalg::idempotent(x.source), ey = pathalg::idempotent(y.target);
    Work w = work();
    for (const auto& [p, c] : ri.tail) accumulate(w, join(ex, p, y), c);
    for (const auto& [p, c] : rj.tail) accumulate(w, join(x, p, ey), -c);
    Poly out(w.begin(), w.end());
    return out;
  }

  void add_rule(Poly p) {
    RatFunc inv = p.front().second.inverse();
    Path lead = p.front().first;
    if (lead.is_idempotent()) {
      dead.insert(lead.source);
      for (std::size_t r = 0; r < rules.size(); ++r) {
        if (!rules[r].alive || !touches_dead(rules[r].lead)) continue;
        retire(r);
      }
      return;
    }
    RuleRec rec{lead, {}, order.degree(lead), true};
    for (std::size_t i = 1; i < p.size(); ++i) rec.tail.emplace_back(p[i].first, -(p[i].second * inv));
    // drop rules whose lead contains the new lead
    for (std::size_t r = 0; r < rules.size(); ++r)
      if (rules[r].alive && rules[r].lead.word.find(lead.word) != std::string::npos) retire(r);
    rules.push_back(std::move(rec));
    trie_insert(lead.word, int(rules.size() - 1));
    add_pairs(rules.size() - 1);
  }

  void retire(std::size_t r) {
    rules[r].alive = false;
    trie_erase(rules[r].lead.word);
    Poly p;
    p.emplace_back(rules[r].lead, RatFunc(1));
    for (const auto& [q, c] : rules[r].tail) p.emplace_back(q, -c);
    push_poly(std::move(p));
  }

  void run(int max_degree, Budget& budget) {
    degree = std::max(degree, max_degree);
    ItemCmp cmp{this};
    std::priority_queue<std::size_t, std::vector<std::size_t>, ItemCmp> queue(cmp);
    auto drain_pending = [&] {
      std::vector<std::size_t> keep;
      for (auto i : pending) {
        if (items[i].deg <= degree)
          queue.push(i);
        else
          keep.push_back(i);
      }
      pending.swap(keep);
    };
    drain_pending();
    while (!queue.empty()) {
      std::size_t idx = queue.top();
      queue.pop();
      Poly p;
      if (items[idx].is_pair) {
        const Item& it = items[idx];
        if (!rules[it.i].alive || !rules[it.j].alive) continue;
        p = spoly(it);
      } else {
        p = std::move(items[idx].poly);
      }
      budget.charge();
      Work w = work();
      for (auto& [q, c] : p) accumulate(w, q, c);
      Poly r = reduce(w, budget);
      if (!r.empty()) {
        if (order.degree(r.front().first) > degree) {
          push_poly(std::move(r));
        } else {
          add_rule(std::move(r));
        }
      }
      drain_pending();
      // release finished item storage
      items[idx].poly.clear();
    }
    interreduce(budget);
  }

  void interreduce(Budget& budget) {
    for (auto& r : rules) {
      if (!r.alive) continue;
      Work w = work();
      for (auto& [q, c] : r.tail) accumulate(w, q, c);
      r.tail = reduce(w, budget);
    }
  }
};

GroebnerBasis::GroebnerBasis(const AlgebraPresentation& alg, MonomialOrder order)
    : impl_(std::make_unique<Impl>(alg, std::move(order))) {
  pathalg::validate(alg);
  for (const auto& rel : alg.relations) {
    if (rel.is_zero()) continue;
    Poly p(rel.terms().begin(), rel.terms().end());
    std::sort(p.begin(), p.end(), [&](const auto& a, const auto& b) { return impl_->order.compare(a.first, b.first) > 0; });
    impl_->push_poly(std::move(p));
  }
}

GroebnerBasis::~GroebnerBasis() = default;
GroebnerBasis::GroebnerBasis(GroebnerBasis&&) noexcept = default;
GroebnerBasis& GroebnerBasis::operator=(GroebnerBasis&&) noexcept = default;
GroebnerBasis::GroebnerBasis(const GroebnerBasis& o) : impl_(std::make_unique<Impl>(*o.impl_)) {}

void GroebnerBasis::extend(int max_degree, Budget& budget) { impl_->run(max_degree, budget); }

const AlgebraPresentation& GroebnerBasis::algebra() const { return impl_->alg; }
const MonomialOrder& GroebnerBasis::order() const { return impl_->order; }
int GroebnerBasis::truncation_degree() const { return impl_->degree; }

bool GroebnerBasis::complete() const {
  for (auto i : impl_->pending) {
    const auto& it = impl_->items[i];
    if (it.is_pair && (!impl_->rules[it.i].alive || !impl_->rules[it.j].alive)) continue;
    return false;
  }
  return true;
}

std::vector<Rule> GroebnerBasis::rules() const {
  std::vector<Rule> out;
  const auto& ctx = impl_->alg.context;
  for (auto v : impl_->dead) out.push_back({pathalg::idempotent(v), Element(ctx)});
  for (const auto& r : impl_->rules) {
    if (!r.alive) continue;
    Element t(ctx);
    for (const auto& [p, c] : r.tail) t.add_term(p, c);
    out.push_back({r.lead, t});
  }
  std::sort(out.begin(), out.end(), [&](const Rule& a, const Rule& b) { return impl_->order.compare(a.lead, b.lead) < 0; });
  return out;
}

std::size_t GroebnerBasis::size() const {
  std::size_t n = impl_->dead.size();
  for (const auto& r : impl_->rules) n += r.alive;
  return n;
}

std::size_t GroebnerBasis::max_lead_length() const {
  std::size_t m = 0;
  for (const auto& r : impl_->rules)
    if (r.alive) m = std::max(m, r.lead.length());
  return m;
}

std::vector<VertexId> GroebnerBasis::dead_vertices() const { return {impl_->dead.begin(), impl_->dead.end()}; }

bool GroebnerBasis::reducible(const Path& p) const { return impl_->touches_dead(p) || impl_->find(p).has_value(); }

Element GroebnerBasis::normal_form(const Element& x) const {
  if (!pathalg::same_algebra(x.context(), impl_->alg.context)) throw DomainError("element belongs to another algebra");
  if (x.is_zero()) return Element(impl_->alg.context);
  if (!complete() && x.degree(impl_->order) > impl_->degree)
    throw DomainError("element degree " + std::to_string(x.degree(impl_->order)) + " exceeds truncation degree " +
                      std::to_string(impl_->degree));
  Budget b{std::numeric_limits<std::uint64_t>::max(), 0};
  Work w = impl_->work();
  for (const auto& [p, c] : x.terms()) accumulate(w, p, c);
  Element out(impl_->alg.context);
  for (auto& [p, c] : impl_->reduce(w, b)) out.add_term(p, c);
  return out;
}

GroebnerBasis truncated_groebner(const AlgebraPresentation& alg, const MonomialOrder& order, int max_degree,
                                 std::uint64_t budget) {
  if (max_degree < alg.max_relation_degree())
    throw DomainError("truncation degree " + std::to_string(max_degree) + " is below the largest relation degree " +
                      std::to_string(alg.max_relation_degree()));
  GroebnerBasis gb(alg, order);
  Budget b{budget, 0};
  gb.extend(max_degree, b);
  return gb;
}

GroebnerBasis truncated_groebner(const AlgebraPresentation& alg, int max_degree, std::uint64_t budget) {
  return truncated_groebner(alg, alg.order(), max_degree, budget);
}

Element normal_form(const Element& x, const GroebnerBasis& gb) { return gb.normal_form(x); }

namespace {

constexpr std::size_t kWordCap = 5000000;

template <class Visit>
void walk(const GroebnerBasis& gb, std::optional<VertexId> source, std::optional<int> max_degree, Visit visit) {
  const auto& q = gb.algebra().quiver();
  const auto& ord = gb.order();
  auto dead = gb.dead_vertices();
  auto alive = [&](VertexId v) { return std::find(dead.begin(), dead.end(), v) == dead.end(); };
  std::size_t count = 0;
  for (VertexId v : q.vertices()) {
    if (!alive(v) || (source && *source != v)) continue;
    std::vector<Path> stack{pathalg::idempotent(v)};
    while (!stack.empty()) {
      Path p = std::move(stack.back());
      stack.pop_back();
      if (++count > kWordCap) throw BudgetExceeded("normal-word enumeration exceeded " + std::to_string(kWordCap) + " words", count);
      visit(p);
      for (std::size_t a = q.arrow_count(); a-- > 0;) {
        const auto& arr = q.arrow(a);
        if (arr.source != p.target || !alive(arr.target)) continue;
        Path n{p.source, arr.target, p.word + char(a)};
        if (max_degree && ord.degree(n) > *max_degree) continue;
        if (gb.reducible(Path{n.source, n.target, n.word.substr(n.word.size() - std::min(n.word.size(), gb.max_lead_length()))}))
          continue;
        stack.push_back(std::move(n));
      }
    }
  }
}

}  // namespace

bool finite_normal_words(const GroebnerBasis& gb) {
  const auto& q = gb.algebra().quiver();
  auto dead = gb.dead_vertices();
  auto alive = [&](VertexId v) { return std::find(dead.begin(), dead.end(), v) == dead.end(); };
  std::size_t m = gb.max_lead_length();
  std::size_t ell = m > 0 ? m - 1 : 0;
  // nodes: normal words of exactly ell letters
  std::vector<Path> nodes;
  {
    std::vector<Path> layer;
    for (VertexId v : q.vertices())
      if (alive(v)) layer.push_back(pathalg::idempotent(v));
    for (std::size_t len = 0; len < ell; ++len) {
      std::vector<Path> next;
      for (const auto& p : layer)
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
          const auto& arr = q.arrow(a);
          if (arr.source != p.target || !alive(arr.target)) continue;
          Path n{p.source, arr.target, p.word + char(a)};
          if (!gb.reducible(n)) next.push_back(std::move(n));
        }
      layer.swap(next);
      if (layer.size() > kWordCap) throw BudgetExceeded("normal-word graph too large", layer.size());
    }
    nodes = std::move(layer);
  }
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  std::vector<std::vector<std::size_t>> edges(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Path& p = nodes[i];
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arr = q.arrow(a);
      if (arr.source != p.target || !alive(arr.target)) continue;
      Path n{p.source, arr.target, p.word + char(a)};
      if (gb.reducible(n)) continue;
      Path tail = ell == 0 ? pathalg::idempotent(arr.target)
                           : Path{q.arrow(std::uint8_t(n.word[1])).source, arr.target, n.word.substr(1)};
      auto it = index.find(tail);
      if (it != index.end()) edges[i].push_back(it->second);
    }
  }
  std::vector<int> color(nodes.size(), 0);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (color[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    color[s] = 1;
    while (!stack.empty()) {
      auto& [u, k] = stack.back();
      if (k < edges[u].size()) {
        std::size_t v = edges[u][k++];
        if (color[v] == 1) return false;
        if (color[v] == 0) {
          color[v] = 1;
          stack.push_back({v, 0});
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

std::vector<Path> enumerate_normal_words(const GroebnerBasis& gb, std::optional<VertexId> source,
                                         std::optional<VertexId> target, std::optional<int> max_degree) {
  if (!max_degree) {
    if (!gb.complete()) throw DomainError("unbounded enumeration needs a complete basis");
    if (!finite_normal_words(gb)) throw DomainError("infinitely many normal words");
  }
  std::vector<Path> out;
  walk(gb, source, max_degree, [&](const Path& p) {
    if (!target || p.target == *target) out.push_back(p);
  });
  const auto& ord = gb.order();
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) { return ord.compare(a, b) < 0; });
  return out;
}

GroebnerBasis complete_groebner(const AlgebraPresentation& alg, const MonomialOrder& order, std::uint64_t budget) {
  GroebnerBasis gb(alg, order);
  Budget b{budget, 0};
  int d = std::max(1, alg.max_relation_degree());
  for (;;) {
    gb.extend(d, b);
    if (gb.complete()) return gb;
    if (d > 400) throw BudgetExceeded("completion did not close below degree 400", b.used);
    d += std::max(2, d / 2);
  }
}

DimensionResult dimension(const AlgebraPresentation& alg, const MonomialOrder& order, std::uint64_t budget) {
  auto gb = complete_groebner(alg, order, budget);
  DimensionResult r;
  r.degree = gb.truncation_degree();
  r.finite = finite_normal_words(gb);
  if (r.finite) r.value = enumerate_normal_words(gb).size();
  return r;
}

DimensionResult dimension(const AlgebraPresentation& alg, std::uint64_t budget) {
  return dimension(alg, alg.order(), budget);
}

std::string serialize(const GroebnerBasis& gb) {
  std::ostringstream os;
  const auto& q = gb.algebra().quiver();
  auto names = gb.order().precedence_names(q);
  os << "order:";
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : " ") << names[i];
  os << "\ntruncation: " << gb.truncation_degree() << "\ncomplete: " << (gb.complete() ? "true" : "false") << "\nrules:\n";
  for (const auto& r : gb.rules())
    os << "  " << pathalg::path_string(q, r.lead) << " -> " << pathalg::to_string(r.tail, gb.order()) << "\n";
  return os.str();
}

}  // namespace flopcalc::ncgb
