#include "flopcalc/coeff/monomial.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "flopcalc/errors.hpp"

namespace flopcalc::coeff {

namespace {

void check_exponent(unsigned e) {
  if (e > 255) throw DomainError("monomial exponent overflow (" + std::to_string(e) + ")");
}

}  // namespace

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw DomainError("too many polynomial variables");
  check_exponent(power);
  Monomial m;
  m.exps_[index] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

std::size_t Monomial::support_bound() const {
  for (std::size_t i = kMaxVars; i > 0; --i)
    if (exps_[i - 1] != 0) return i;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exps_[i]) + o.exps_[i];
    check_exponent(e);
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - o.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
  return r;
}

Monomial Monomial::with_exponent(std::size_t i, unsigned e) const {
  check_exponent(e);
  Monomial r = *this;
  r.degree_ = static_cast<std::uint16_t>(r.degree_ - r.exps_[i] + e);
  r.exps_[i] = static_cast<std::uint8_t>(e);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = degree_;
  for (auto e : exps_) h = h * 131 + e;
  return h;
}

}  // namespace flopcalc::coeff
