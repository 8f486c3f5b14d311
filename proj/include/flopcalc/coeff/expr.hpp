#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace flopcalc::coeff {

/// Syntax tree for `+ - * / ^` expressions over integer literals and identifiers.
struct Expr {
  enum class Kind { Number, Ident, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  std::string text;  ///< literal digits or identifier
  unsigned exponent = 0;
  std::vector<std::unique_ptr<Expr>> args;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses a full expression; line/column offsets locate `text` inside a larger file.
std::unique_ptr<Expr> parse_expr(std::string_view text, std::size_t line = 1, std::size_t column = 1);

}  // namespace flopcalc::coeff
