#include "flopcalc/coeff/expr.hpp"

#include <cctype>

#include "flopcalc/errors.hpp"

namespace flopcalc::coeff {

namespace {

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    std::size_t start = i;
    std::size_t col = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Kind::Number, std::string(s.substr(start, i - start)), line, col});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
      out.push_back({Token::Kind::Ident, std::string(s.substr(start, i - start)), line, col});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      ++i;
      out.push_back({Token::Kind::Symbol, std::string(1, c), line, col});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    column += i - start;
  }
  out.push_back({Token::Kind::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::unique_ptr<Expr> parse() {
    auto e = sum();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(const char* sym) {
    if (peek().kind == Token::Kind::Symbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

  std::unique_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  std::unique_ptr<Expr> binary(Expr::Kind k, const Token& at, std::unique_ptr<Expr> l, std::unique_ptr<Expr> r) {
    auto e = node(k, at);
    e->args.push_back(std::move(l));
    e->args.push_back(std::move(r));
    return e;
  }

  std::unique_ptr<Expr> sum() {
    auto lhs = product();
    while (true) {
      Token at = peek();
      if (accept("+")) {
        lhs = binary(Expr::Kind::Add, at, std::move(lhs), product());
      } else if (accept("-")) {
        lhs = binary(Expr::Kind::Sub, at, std::move(lhs), product());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> product() {
    auto lhs = unary();
    while (true) {
      Token at = peek();
      if (accept("*")) {
        lhs = binary(Expr::Kind::Mul, at, std::move(lhs), unary());
      } else if (accept("/")) {
        lhs = binary(Expr::Kind::Div, at, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> unary() {
    Token at = peek();
    if (accept("-")) {
      auto e = node(Expr::Kind::Neg, at);
      e->args.push_back(unary());
      return e;
    }
    if (accept("+")) return unary();
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    Token at = peek();
    if (accept("^")) {
      if (peek().kind != Token::Kind::Number) fail("expected integer exponent");
      const std::string& digits = peek().text;
      if (digits.size() > 4) fail("exponent too large");
      auto e = node(Expr::Kind::Pow, at);
      e->exponent = unsigned(std::stoul(digits));
      ++pos_;
      e->args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  std::unique_ptr<Expr> atom() {
    Token at = peek();
    if (at.kind == Token::Kind::Number || at.kind == Token::Kind::Ident) {
      auto e = node(at.kind == Token::Kind::Number ? Expr::Kind::Number : Expr::Kind::Ident, at);
      e->text = at.text;
      ++pos_;
      return e;
    }
    if (accept("(")) {
      auto e = sum();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    if (at.kind == Token::Kind::End) fail("unexpected end of expression");
    fail("unexpected '" + at.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expr(std::string_view text, std::size_t line, std::size_t column) {
  return Parser(tokenize(text, line, column)).parse();
}

}  // namespace flopcalc::coeff
