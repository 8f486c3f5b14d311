#include "flopcalc/pathalg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "flopcalc/coeff/expr.hpp"
#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"

namespace flopcalc::pathalg {

using coeff::Expr;

int AlgebraPresentation::max_relation_degree() const {
  int d = 0;
  for (const auto& r : relations) d = std::max(d, r.degree(order()));
  return d;
}

ContextPtr make_context(Quiver q, ParamRing params, const std::vector<std::string>& precedence) {
  for (const auto& a : q.arrows()) {
    if (params.contains(a.name)) throw DomainError("name '" + a.name + "' is both an arrow and a parameter");
    if (a.name.size() > 1 && a.name[0] == 'e' &&
        std::all_of(a.name.begin() + 1, a.name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DomainError("arrow name '" + a.name + "' clashes with idempotent syntax");
  }
  return std::make_shared<const AlgebraContext>(std::move(q), std::move(params), precedence);
}

namespace {

struct Value {
  bool scalar = true;
  RatFunc s;
  Element e;
};

Element as_element(const Value& v, const ContextPtr& ctx) {
  return v.scalar ? Element::scalar(ctx, v.s) : v.e;
}

std::optional<VertexId> idempotent_vertex(const std::string& name) {
  if (name.size() < 2 || name[0] != 'e') return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  if (name.size() > 6) return std::nullopt;
  return VertexId(std::stoi(name.substr(1)));
}

Value eval(const Expr& x, const ContextPtr& ctx) {
  auto err = [&](const std::string& msg) { return ParseError(msg, x.line, x.column); };
  switch (x.kind) {
    case Expr::Kind::Number:
      return Value{true, RatFunc(Rational(mpz_class(x.text))), {}};
    case Expr::Kind::Ident: {
      if (auto a = ctx->quiver.arrow_index(x.text))
        return Value{false, {}, Element::path(ctx, arrow_path(ctx->quiver, *a))};
      if (auto p = ctx->params.index_of(x.text)) return Value{true, RatFunc(MultiPoly::variable(*p)), {}};
      if (auto v = idempotent_vertex(x.text)) {
        if (!ctx->quiver.has_vertex(*v)) throw err("undeclared vertex in '" + x.text + "'");
        return Value{false, {}, Element::idempotent(ctx, *v)};
      }
      throw err("undeclared name '" + x.text + "'");
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      Value l = eval(*x.args[0], ctx), r = eval(*x.args[1], ctx);
      bool add = x.kind == Expr::Kind::Add;
      if (l.scalar && r.scalar) return Value{true, add ? l.s + r.s : l.s - r.s, {}};
      Element a = as_element(l, ctx), b = as_element(r, ctx);
      return Value{false, {}, add ? a + b : a - b};
    }
    case Expr::Kind::Mul: {
      Value l = eval(*x.args[0], ctx), r = eval(*x.args[1], ctx);
      if (l.scalar && r.scalar) return Value{true, l.s * r.s, {}};
      if (l.scalar) return Value{false, {}, r.e.scaled(l.s)};
      if (r.scalar) return Value{false, {}, l.e.scaled(r.s)};
      Element prod = l.e * r.e;
      if (prod.is_zero() && !l.e.is_zero() && !r.e.is_zero()) throw err("non-composable product");
      return Value{false, {}, prod};
    }
    case Expr::Kind::Div: {
      Value l = eval(*x.args[0], ctx), r = eval(*x.args[1], ctx);
      if (!r.scalar) throw err("division by a path");
      if (r.s.is_zero()) throw err("division by zero");
      RatFunc inv = r.s.inverse();
      if (l.scalar) return Value{true, l.s * inv, {}};
      return Value{false, {}, l.e.scaled(inv)};
    }
    case Expr::Kind::Neg: {
      Value v = eval(*x.args[0], ctx);
      if (v.scalar) return Value{true, -v.s, {}};
      return Value{false, {}, -v.e};
    }
    case Expr::Kind::Pow: {
      Value v = eval(*x.args[0], ctx);
      if (v.scalar) return Value{true, v.s.pow(x.exponent), {}};
      if (x.exponent == 0) return Value{true, RatFunc(1), {}};
      Element r = v.e;
      for (unsigned i = 1; i < x.exponent; ++i) {
        r = r * v.e;
        if (r.is_zero() && !v.e.is_zero()) throw err("non-composable power");
      }
      return Value{false, {}, r};
    }
  }
  throw err("bad expression");
}

struct Item {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Section {
  std::string key;
  std::size_t line;
  std::vector<Item> items;
};

const char* const kKeys[] = {"name", "params", "vertices", "arrows", "relations", "order"};

std::string trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset = b;
  return std::string(s.substr(b, e - b));
}

void split_items(std::string_view content, std::size_t line, std::size_t column, char sep, std::vector<Item>& out) {
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find(sep, start);
    if (end == std::string_view::npos) end = content.size();
    std::size_t off = 0;
    std::string piece = trim(content.substr(start, end - start), off);
    if (!piece.empty()) out.push_back({piece, line, column + start + off});
    start = end + 1;
  }
}

std::vector<Section> sections(std::string_view text) {
  std::vector<Section> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++lineno;
    pos = nl + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    if (lead == line.size()) continue;
    std::string_view body = line.substr(lead);
    std::size_t content_col = lead + 1;
    bool keyed = false;
    for (const char* key : kKeys) {
      std::string_view k(key);
      if (body.substr(0, k.size()) == k) {
        std::size_t j = k.size();
        while (j < body.size() && body[j] == ' ') ++j;
        if (j < body.size() && body[j] == ':') {
          for (const auto& s : out)
            if (s.key == k) throw ParseError("duplicate section '" + std::string(k) + "'", lineno, lead + 1);
          out.push_back({std::string(k), lineno, {}});
          body = body.substr(j + 1);
          content_col += j + 1;
          keyed = true;
          break;
        }
      }
    }
    if (!keyed && out.empty()) throw ParseError("expected a section such as 'params:' or 'arrows:'", lineno, lead + 1);
    Section& s = out.back();
    if (s.key == "name") {
      std::size_t off = 0;
      std::string n = trim(body, off);
      if (!n.empty()) s.items.push_back({n, lineno, content_col + off});
    } else {
      split_items(body, lineno, content_col, s.key == "relations" ? ';' : ',', s.items);
    }
  }
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

/// Splits "name (deg N)" into name and degree.
std::pair<std::string, std::optional<int>> with_degree(const Item& it) {
  std::string s = it.text;
  std::optional<int> deg;
  auto open = s.find('(');
  if (open != std::string::npos) {
    auto close = s.find(')', open);
    if (close == std::string::npos || close + 1 != s.size())
      throw ParseError("malformed degree annotation", it.line, it.column + open);
    std::istringstream is(s.substr(open + 1, close - open - 1));
    std::string word;
    int d = 0;
    if (!(is >> word >> d) || word != "deg" || d <= 0)
      throw ParseError("expected '(deg N)' with positive N", it.line, it.column + open);
    deg = d;
    s = s.substr(0, open);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  }
  return {s, deg};
}

int parse_int(const std::string& s, std::size_t line, std::size_t col) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a vertex number, got '" + s + "'", line, col);
  return std::stoi(s);
}

}  // namespace

Element parse_element(std::string_view text, const ContextPtr& ctx, std::size_t line, std::size_t column) {
  auto x = coeff::parse_expr(text, line, column);
  return as_element(eval(*x, ctx), ctx);
}

void validate(const AlgebraPresentation& alg) {
  for (std::size_t i = 0; i < alg.relations.size(); ++i) {
    const auto& r = alg.relations[i];
    if (!same_algebra(r.context(), alg.context)) throw DomainError("relation " + std::to_string(i + 1) + " belongs to another algebra");
    if (!r.is_zero() && !r.endpoints())
      throw DomainError("relation " + std::to_string(i + 1) + " is not endpoint-homogeneous: " + to_string(r));
  }
}

AlgebraPresentation parse_presentation(std::string_view text) {
  auto secs = sections(text);
  std::vector<std::string> pnames;
  std::vector<int> pdegs;
  std::vector<VertexId> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::string> precedence;
  const Section* rels = nullptr;
  std::string name;
  bool have_vertices = false;
  for (const auto& s : secs) {
    if (s.key == "name") {
      if (!s.items.empty()) name = s.items[0].text;
    } else if (s.key == "params") {
      for (const auto& it : s.items) {
        auto [n, d] = with_degree(it);
        if (!valid_identifier(n)) throw ParseError("invalid parameter name '" + n + "'", it.line, it.column);
        if (std::find(pnames.begin(), pnames.end(), n) != pnames.end())
          throw ParseError("duplicate parameter '" + n + "'", it.line, it.column);
        pnames.push_back(n);
        pdegs.push_back(d.value_or(2));
      }
    } else if (s.key == "vertices") {
      have_vertices = true;
      for (const auto& it : s.items) {
        int v = parse_int(it.text, it.line, it.column);
        if (std::find(vertices.begin(), vertices.end(), v) != vertices.end())
          throw ParseError("duplicate vertex " + it.text, it.line, it.column);
        vertices.push_back(v);
      }
    } else if (s.key == "arrows") {
      for (const auto& it : s.items) {
        auto [body, d] = with_degree(it);
        auto colon = body.find(':');
        auto arrow = body.find("->");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
          throw ParseError("expected 'name: source -> target'", it.line, it.column);
        std::size_t off = 0;
        std::string an = trim(std::string_view(body).substr(0, colon), off);
        if (!valid_identifier(an)) throw ParseError("invalid arrow name '" + an + "'", it.line, it.column);
        std::size_t so = 0, to = 0;
        std::string src = trim(std::string_view(body).substr(colon + 1, arrow - colon - 1), so);
        std::string tgt = trim(std::string_view(body).substr(arrow + 2), to);
        int sv = parse_int(src, it.line, it.column + colon + 1 + so);
        int tv = parse_int(tgt, it.line, it.column + arrow + 2 + to);
        for (auto [v, col] : {std::pair{sv, colon + 1 + so}, std::pair{tv, arrow + 2 + to}})
          if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
            throw ParseError("undeclared vertex " + std::to_string(v), it.line, it.column + col);
        for (const auto& a : arrows)
          if (a.name == an) throw ParseError("duplicate arrow '" + an + "'", it.line, it.column);
        arrows.push_back({an, sv, tv, d.value_or(1)});
      }
    } else if (s.key == "order") {
      for (const auto& it : s.items) precedence.push_back(it.text);
    } else if (s.key == "relations") {
      rels = &s;
    }
  }
  if (!have_vertices) throw ParseError("missing 'vertices:' section", 1, 1);
  ContextPtr ctx;
  try {
    ctx = make_context(Quiver(vertices, arrows), ParamRing(pnames, pdegs), precedence);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, 1);
  }
  AlgebraPresentation alg{ctx, {}, name};
  if (rels) {
    for (const auto& it : rels->items) {
      Element r = parse_element(it.text, ctx, it.line, it.column);
      if (!r.is_zero() && !r.endpoints())
        throw ParseError("relation is not endpoint-homogeneous", it.line, it.column);
      alg.relations.push_back(std::move(r));
    }
  }
  return alg;
}

std::string print_presentation(const AlgebraPresentation& alg) {
  std::ostringstream os;
  const auto& q = alg.quiver();
  const auto& p = alg.params();
  if (!alg.name.empty()) os << "name: " << alg.name << "\n";
  os << "params:";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << (i ? ", " : " ") << p.name(i);
    if (p.degree(i) != 2) os << " (deg " << p.degree(i) << ")";
  }
  os << "\nvertices:";
  for (std::size_t i = 0; i < q.vertices().size(); ++i) os << (i ? ", " : " ") << q.vertices()[i];
  os << "\narrows:";
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    const auto& a = q.arrow(i);
    os << (i ? ", " : " ") << a.name << ": " << a.source << " -> " << a.target;
    if (a.degree != 1) os << " (deg " << a.degree << ")";
  }
  os << "\norder:";
  auto names = alg.order().precedence_names(q);
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : " ") << names[i];
  os << "\nrelations:\n";
  for (const auto& r : alg.relations) os << "  " << to_string(r) << "\n";
  return os.str();
}

bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (!(a.quiver() == b.quiver()) || !(a.params() == b.params()) || a.params().degrees() != b.params().degrees())
    return false;
  if (a.order().precedence() != b.order().precedence() || a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
    if (a.relations[i].terms() != b.relations[i].terms()) return false;
  return a.name == b.name;
}

Element map_element(const Element& x, const ContextPtr& target, const std::map<std::string, Element>& arrows,
                    const std::map<std::string, MultiPoly>& params) {
  const auto& src = x.context();
  Element out(target);
  if (x.is_zero()) return out;
  std::vector<Element> images;
  for (const auto& a : src->quiver.arrows()) {
    auto it = arrows.find(a.name);
    if (it != arrows.end()) {
      images.push_back(it->second);
    } else {
      auto j = target->quiver.arrow_index(a.name);
      images.push_back(j ? Element::path(target, arrow_path(target->quiver, *j)) : Element(target));
    }
  }
  for (const auto& [p, c] : x.terms()) {
    RatFunc k = coeff::substitute(c, src->params, target->params, params);
    Element term(target);
    if (p.is_idempotent()) {
      if (!target->quiver.has_vertex(p.source)) continue;
      term = Element::idempotent(target, p.source);
    } else {
      term = images[p.letter(0)];
      for (std::size_t i = 1; i < p.length() && !term.is_zero(); ++i) term = term * images[p.letter(i)];
    }
    out += term.scaled(k);
  }
  return out;
}

}  // namespace flopcalc::pathalg
