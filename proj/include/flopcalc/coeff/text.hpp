#pragma once

#include <string>
#include <string_view>

#include "flopcalc/coeff/param_ring.hpp"

namespace flopcalc::coeff {

std::string to_string(const Rational& c);
std::string to_string(const MultiPoly& p, const ParamRing& ring);
std::string to_string(const RatFunc& f, const ParamRing& ring);

MultiPoly parse_poly(std::string_view text, const ParamRing& ring);
RatFunc parse_ratfunc(std::string_view text, const ParamRing& ring);

}  // namespace flopcalc::coeff
