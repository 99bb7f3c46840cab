#pragma once

#include "smtlab/poly.hpp"

namespace smtlab {

// Parses the polynomial grammar:
//   expr   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   coeff  := int | int '/' uint | '(' ratfun-in-z ')'
// Whitespace insignificant, no implicit multiplication. A leading '-' on
// the first term is accepted as a convenience. Rejects non-homogeneous
// input, unknown variables and coefficient denominators that are zero;
// all errors are ParseError carrying the offending position.
MovingPoly parse_poly(const std::string& text, const std::vector<std::string>& variables);

// parse_poly restricted to constant coefficients.
Poly parse_fixed_poly(const std::string& text, const std::vector<std::string>& variables);

// Standalone rational function in z, same grammar as inside coeff parens.
RationalFunction parse_ratfun(const std::string& text);

} // namespace smtlab
