#include "flopcalc/coeff/ratfunc.hpp"

#include "flopcalc/errors.hpp"

namespace flopcalc::coeff {

namespace {

MultiPoly quotient(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) throw DomainError("internal: inexact division in rational function");
  return *q;
}

}  // namespace

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) {
  *this = reduced(num, den);
}

RatFunc RatFunc::reduced(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatFunc();
  if (den.is_constant()) return RatFunc(Raw{}, num * (1 / den.constant_value()), MultiPoly(Rational(1)));
  MultiPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = quotient(num, g);
    den = quotient(den, g);
  }
  Rational lc = den.leading_coeff();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return RatFunc(Raw{}, std::move(num), std::move(den));
}

RatFunc RatFunc::operator-() const {
  return RatFunc(Raw{}, -num_, den_);
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw DivisionByZero();
  if (num_.is_constant()) return RatFunc(Raw{}, den_ * (1 / num_.constant_value()), MultiPoly(Rational(1)));
  Rational lc = num_.leading_coeff();
  Rational inv = 1 / lc;
  return RatFunc(Raw{}, den_ * inv, num_ * inv);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(RatFunc::Raw{}, a.num_ + b.num_, a.den_);
  if (a.den_ == b.den_) return RatFunc::reduced(a.num_ + b.num_, a.den_);
  MultiPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) return RatFunc::reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  MultiPoly ad = quotient(a.den_, g), bd = quotient(b.den_, g);
  return RatFunc::reduced(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(RatFunc::Raw{}, a.num_ * b.num_, a.den_);
  if (a.is_constant()) return RatFunc(RatFunc::Raw{}, b.num_ * a.num_.constant_value(), b.den_);
  if (b.is_constant()) return RatFunc(RatFunc::Raw{}, a.num_ * b.num_.constant_value(), a.den_);
  MultiPoly g1 = gcd(a.num_, b.den_);
  MultiPoly g2 = gcd(b.num_, a.den_);
  MultiPoly n = quotient(a.num_, g1) * quotient(b.num_, g2);
  MultiPoly d = quotient(a.den_, g2) * quotient(b.den_, g1);
  Rational lc = d.leading_coeff();
  if (lc != 1) {
    Rational inv = 1 / lc;
    n *= inv;
    d *= inv;
  }
  return RatFunc(RatFunc::Raw{}, std::move(n), std::move(d));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  return a * b.inverse();
}

RatFunc RatFunc::pow(unsigned e) const {
  if (e == 0) return RatFunc(1);
  return RatFunc(Raw{}, num_.pow(e), den_.pow(e));
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw DivisionByZero();
  return num_.evaluate(point) / d;
}

RatFunc RatFunc::substitute(std::span<const std::optional<MultiPoly>> images) const {
  return reduced(num_.substitute(images), den_.substitute(images));
}

}  // namespace flopcalc::coeff
