#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flopcalc/coeff/monomial.hpp"

namespace flopcalc::coeff {

using Rational = mpq_class;

/// Sparse polynomial over Q. Terms are kept in strictly decreasing grlex order.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly variable(std::size_t index);
  static MultiPoly monomial(const Monomial& m, const Rational& c);
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  Rational constant_value() const;  ///< coefficient of the unit monomial
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  std::size_t support_bound() const;
  bool contains_var(std::size_t var) const { return degree_in(var) > 0; }
  /// Greatest common monomial divisor of all terms.
  Monomial monomial_content() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly mul_monomial(const Monomial& m, const Rational& c) const;
  MultiPoly pow(unsigned e) const;
  /// Leading coefficient scaled to 1; zero stays zero.
  MultiPoly monic() const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Simultaneous substitution; images[i] replaces variable i. Missing entries keep the variable.
  MultiPoly substitute(std::span<const std::optional<MultiPoly>> images) const;
  /// Substitute a value for one variable.
  MultiPoly evaluate_var(std::size_t var, const Rational& value) const;

  /// View as a univariate polynomial in var: result[k] is the coefficient of var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b if b divides a in Q[vars], otherwise nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Monic greatest common divisor (gcd(0, 0) = 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Elementary symmetric polynomial sigma_k of the inputs.
MultiPoly elementary_symmetric(std::size_t k, std::span<const MultiPoly> vars);

}  // namespace flopcalc::coeff
