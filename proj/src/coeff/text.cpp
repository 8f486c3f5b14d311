#include "flopcalc/coeff/text.hpp"

#include <sstream>

#include "flopcalc/coeff/expr.hpp"
#include "flopcalc/errors.hpp"

namespace flopcalc::coeff {

std::string to_string(const Rational& c) {
  return c.get_str();
}

namespace {

std::string monomial_string(const Monomial& m, const ParamRing& ring) {
  std::string out;
  for (std::size_t i = 0, n = m.support_bound(); i < n; ++i) {
    unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += i < ring.size() ? ring.name(i) : "v" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

RatFunc eval(const Expr& e, const ParamRing& ring) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return RatFunc(Rational(mpz_class(e.text)));
    case Expr::Kind::Ident: {
      auto i = ring.index_of(e.text);
      if (!i) throw ParseError("undeclared parameter '" + e.text + "'", e.line, e.column);
      return RatFunc(MultiPoly::variable(*i));
    }
    case Expr::Kind::Add:
      return eval(*e.args[0], ring) + eval(*e.args[1], ring);
    case Expr::Kind::Sub:
      return eval(*e.args[0], ring) - eval(*e.args[1], ring);
    case Expr::Kind::Mul:
      return eval(*e.args[0], ring) * eval(*e.args[1], ring);
    case Expr::Kind::Div: {
      RatFunc d = eval(*e.args[1], ring);
      if (d.is_zero()) throw ParseError("division by zero", e.line, e.column);
      return eval(*e.args[0], ring) / d;
    }
    case Expr::Kind::Neg:
      return -eval(*e.args[0], ring);
    case Expr::Kind::Pow:
      return eval(*e.args[0], ring).pow(e.exponent);
  }
  return RatFunc();
}

}  // namespace

std::string to_string(const MultiPoly& p, const ParamRing& ring) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = t.coeff < 0;
    Rational c = neg ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << to_string(c);
    } else if (c == 1) {
      os << monomial_string(t.mono, ring);
    } else {
      os << to_string(c) << '*' << monomial_string(t.mono, ring);
    }
  }
  return os.str();
}

std::string to_string(const RatFunc& f, const ParamRing& ring) {
  if (f.is_polynomial()) return to_string(f.num(), ring);
  return "(" + to_string(f.num(), ring) + ")/(" + to_string(f.den(), ring) + ")";
}

MultiPoly parse_poly(std::string_view text, const ParamRing& ring) {
  RatFunc f = parse_ratfunc(text, ring);
  if (!f.is_polynomial()) throw ParseError("expected a polynomial, got a rational function", 1, 1);
  return f.num();
}

RatFunc parse_ratfunc(std::string_view text, const ParamRing& ring) {
  auto e = parse_expr(text);
  return eval(*e, ring);
}

}  // namespace flopcalc::coeff
