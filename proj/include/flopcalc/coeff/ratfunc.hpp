#pragma once

#include "flopcalc/coeff/multipoly.hpp"

namespace flopcalc::coeff {

/// Quotient of polynomials in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                   // NOLINT
  RatFunc(MultiPoly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  std::size_t support_bound() const { return std::max(num_.support_bound(), den_.support_bound()); }

  RatFunc operator-() const;
  RatFunc inverse() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> point) const;
  RatFunc substitute(std::span<const std::optional<MultiPoly>> images) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  struct Raw {};
  RatFunc(Raw, MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc reduced(MultiPoly num, MultiPoly den);

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace flopcalc::coeff
