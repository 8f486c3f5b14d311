#pragma once

#include <map>
#include <string>

#include "flopcalc/catalog/catalog.hpp"

namespace flopcalc::flops {

using catalog::Report;
using coeff::Rational;
using pathalg::AlgebraPresentation;
using pathalg::Element;

/// Sum over occurrences of the arrow in each cyclic word: rotate it to the front and delete it.
Element cyclic_derivative(const Element& w, const std::string& arrow);

/// arrow -> k * arrow for each listed arrow.
Element rescale(const Element& phi, const std::map<std::string, Rational>& scale);

/// Cyclic derivatives lie in the relation ideal, and each relation lies in the ideal of the derivatives.
/// Membership is tested by reduction against truncated bases (degree 0: largest degree involved, plus 2).
Report verify_superpotential(const AlgebraPresentation& alg, const Element& phi, int degree = 0);

}  // namespace flopcalc::flops
