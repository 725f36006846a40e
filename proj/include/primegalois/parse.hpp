#ifndef PRIMEGALOIS_PARSE_HPP
#define PRIMEGALOIS_PARSE_HPP

#include "primegalois/intpoly.hpp"

#include <string>

namespace primegalois {

/// Parse result: input = scale * poly with scale a positive rational and
/// poly primitive with integer coefficients (sign kept on the polynomial).
struct ParsedPoly {
    IntPoly poly;
    mpq_class scale{1};
    std::string variable; // empty for constant input
};

/// Accepts +, -, *, /, ^, parentheses, implicit multiplication ("2x",
/// "(x+1)(x-1)"), integer literals, one variable.  '/' needs a nonzero
/// constant divisor; '^' a nonnegative integer exponent.  ParseError on
/// malformed input, NonUnivariate on a second variable name.
ParsedPoly parse_polynomial(const std::string& text);

/// Shorthand for parse_polynomial(text).poly.
IntPoly parse_poly(const std::string& text);

} // namespace primegalois

#endif
