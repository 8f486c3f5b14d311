#include "flopcalc/flops/representation.hpp"

#include <sstream>

#include "flopcalc/coeff/text.hpp"
#include "flopcalc/errors.hpp"

namespace flopcalc::flops {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      auto piece = trim(s.substr(start, i - start));
      if (!piece.empty()) out.push_back(piece);
      start = i + 1;
    }
  }
  return out;
}

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = MultiPoly(1);
  return m;
}

Matrix product(const Matrix& a, const Matrix& b, std::size_t cols) {
  Matrix out(a.size(), std::vector<MultiPoly>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::size_t dim(const Representation& rep, pathalg::VertexId v) {
  auto it = rep.dims.find(v);
  if (it == rep.dims.end()) throw DomainError("no dimension for vertex " + std::to_string(v));
  return it->second;
}

void check_shapes(const pathalg::Quiver& q, const Representation& rep) {
  for (const auto& a : q.arrows()) {
    auto it = rep.arrows.find(a.name);
    std::size_t r = dim(rep, a.source), c = dim(rep, a.target);
    if (it == rep.arrows.end()) {
      if (r && c) throw DomainError("no matrix for arrow '" + a.name + "'");
      continue;
    }
    bool ok = it->second.size() == r;
    for (const auto& row : it->second) ok = ok && row.size() == c;
    if (!ok)
      throw DomainError("shape mismatch for arrow '" + a.name + "': expected " + std::to_string(r) + "x" +
                        std::to_string(c));
  }
}

const char* kU0 = R"(ring: t, T0b, T0c, T0d, c00, c10, c01, d10
ideal: T0c - c00^2 - c01*c10 ; T0d - c00^2 + d10 + c01*d10 - c00*t - 1/4*t^2
dims: 0 = 1, 4 = 2
a = [1, 0]
A = [t ; -(T0b + c10 + d10)]
b = [0, 1 ; T0b, 0]
c = [c00, c01 ; c10, -c00]
d = [-t/2 - c00, -1 - c01 ; d10, t/2 + c00]
)";

const char* kU1 = R"(ring: t, T0b, T0c, T0d, B00, B01, B10, D10
ideal: T0b - B00^2 - B01*B10 ; T0d - B00^2 + D10 + B01*D10 - B00*t - 1/4*t^2
dims: 0 = 1, 4 = 2
a = [1, 0]
A = [t ; -(T0c + B10 + D10)]
b = [B00, B01 ; B10, -B00]
c = [0, 1 ; T0c, 0]
d = [-t/2 - B00, -1 - B01 ; D10, t/2 + B00]
)";

}  // namespace

std::vector<std::string> builtin_representation_names() { return {"U0", "U1"}; }

Representation builtin_representation(const std::string& name) {
  if (name == "U0") return parse_representation(kU0);
  if (name == "U1") return parse_representation(kU1);
  throw DomainError("unknown representation '" + name + "'");
}

Representation parse_representation(std::string_view text) {
  Representation rep;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::string>> pending_ideal, pending_params, pending_arrows;
  bool have_ring = false;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    auto s = trim(line);
    if (s.empty()) continue;
    auto colon = s.find(':');
    auto eq = s.find('=');
    if (colon != std::string::npos && (eq == std::string::npos || colon < eq)) {
      auto key = trim(std::string_view(s).substr(0, colon));
      auto value = trim(std::string_view(s).substr(colon + 1));
      if (key == "ring") {
        rep.ring = ParamRing(split(value, ','));
        have_ring = true;
      } else if (key == "ideal") {
        pending_ideal.emplace_back(n, value);
      } else if (key == "params") {
        pending_params.emplace_back(n, value);
      } else if (key == "dims") {
        for (const auto& d : split(value, ',')) {
          auto parts = split(d, '=');
          if (parts.size() != 2) throw ParseError("expected vertex = dimension", n, 1);
          try {
            rep.dims[std::stoi(parts[0])] = std::size_t(std::stoul(parts[1]));
          } catch (const std::logic_error&) {
            throw ParseError("bad dimension entry '" + d + "'", n, 1);
          }
        }
      } else {
        throw ParseError("unknown key '" + key + "'", n, 1);
      }
    } else if (eq != std::string::npos) {
      pending_arrows.emplace_back(n, s);
    } else {
      throw ParseError("expected 'key: value' or 'arrow = [matrix]'", n, 1);
    }
  }
  if (!have_ring) throw ParseError("missing 'ring:' line", n, 1);
  auto poly = [&](const std::string& s, std::size_t ln) {
    try {
      return coeff::parse_poly(s, rep.ring);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ln, 1);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), ln, 1);
    }
  };
  for (const auto& [ln, v] : pending_ideal)
    for (const auto& p : split(v, ';')) rep.ideal.push_back(poly(p, ln));
  for (const auto& [ln, v] : pending_params)
    for (const auto& p : split(v, ';')) {
      auto parts = split(p, '=');
      if (parts.size() != 2) throw ParseError("expected parameter = polynomial", ln, 1);
      rep.params[parts[0]] = poly(parts[1], ln);
    }
  for (const auto& [ln, s] : pending_arrows) {
    auto eq = s.find('=');
    auto name = trim(std::string_view(s).substr(0, eq));
    auto body = trim(std::string_view(s).substr(eq + 1));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw ParseError("matrix must be written [r11, r12 ; r21, r22]", ln, 1);
    Matrix m;
    for (const auto& row : split(std::string_view(body).substr(1, body.size() - 2), ';')) {
      std::vector<MultiPoly> r;
      for (const auto& x : split(row, ',')) r.push_back(poly(x, ln));
      m.push_back(std::move(r));
    }
    rep.arrows[name] = std::move(m);
  }
  return rep;
}

std::string print_representation(const Representation& rep) {
  std::ostringstream out;
  out << "ring: ";
  for (std::size_t i = 0; i < rep.ring.size(); ++i) out << (i ? ", " : "") << rep.ring.name(i);
  out << "\n";
  if (!rep.ideal.empty()) {
    out << "ideal: ";
    for (std::size_t i = 0; i < rep.ideal.size(); ++i)
      out << (i ? " ; " : "") << coeff::to_string(rep.ideal[i], rep.ring);
    out << "\n";
  }
  if (!rep.params.empty()) {
    out << "params: ";
    bool first = true;
    for (const auto& [k, v] : rep.params) {
      out << (first ? "" : " ; ") << k << " = " << coeff::to_string(v, rep.ring);
      first = false;
    }
    out << "\n";
  }
  out << "dims: ";
  bool first = true;
  for (const auto& [v, d] : rep.dims) {
    out << (first ? "" : ", ") << v << " = " << d;
    first = false;
  }
  out << "\n";
  for (const auto& [name, m] : rep.arrows) {
    out << name << " = [";
    for (std::size_t i = 0; i < m.size(); ++i) {
      out << (i ? " ; " : "");
      for (std::size_t j = 0; j < m[i].size(); ++j) out << (j ? ", " : "") << coeff::to_string(m[i][j], rep.ring);
    }
    out << "]\n";
  }
  return out.str();
}

Matrix evaluate(const Element& x, const Representation& rep, const coeff::PolyIdeal& ideal) {
  const auto& ctx = *x.context();
  auto ends = x.endpoints();
  if (!ends) throw DomainError("element has mixed endpoints");
  std::size_t rows = dim(rep, ends->first), cols = dim(rep, ends->second);
  Matrix out(rows, std::vector<MultiPoly>(cols));
  for (const auto& [p, c] : x.terms()) {
    if (!c.den().is_constant()) throw DomainError("coefficient with a non-constant denominator");
    auto k = coeff::substitute(c.num(), ctx.params, rep.ring, rep.params) * (1 / c.den().constant_value());
    Matrix m = identity(dim(rep, p.source));
    for (std::size_t i = 0; i < p.length(); ++i) {
      const auto& a = ctx.quiver.arrow(p.letter(i));
      auto it = rep.arrows.find(a.name);
      std::size_t next = dim(rep, a.target);
      if (it == rep.arrows.end()) {
        m = Matrix(m.size(), std::vector<MultiPoly>(next));
      } else {
        m = product(m, it->second, next);
      }
    }
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += m[i][j] * k;
  }
  for (auto& row : out)
    for (auto& e : row) e = ideal.reduce(e);
  return out;
}

catalog::Report verify_representation(const AlgebraPresentation& alg, const Representation& rep) {
  check_shapes(alg.quiver(), rep);
  coeff::PolyIdeal ideal(rep.ideal);
  catalog::Report r;
  for (std::size_t i = 0; i < alg.relations.size(); ++i) {
    auto m = evaluate(alg.relations[i], rep, ideal);
    std::string detail;
    for (std::size_t a = 0; a < m.size() && detail.empty(); ++a)
      for (std::size_t b = 0; b < m[a].size() && detail.empty(); ++b)
        if (!m[a][b].is_zero())
          detail = "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                   ") = " + coeff::to_string(m[a][b], rep.ring);
    r.lines.push_back({"relation " + std::to_string(i + 1), detail.empty(), detail});
  }
  return r;
}

}  // namespace flopcalc::flops
