#pragma once

#include <optional>
#include <string>

#include "monokit/poly.hpp"

namespace monokit {

/// Result of parsing polynomial text: bivariate when y occurs, otherwise
/// univariate in its one variable (x or z).
struct ParsedPolynomial {
  std::optional<RatPoly> uni;
  std::optional<BiPoly> bi;
  char variable = 'z';

  bool is_bivariate() const { return bi.has_value(); }
};

/// Grammar: sums of products of powers of numbers, x, y, z and
/// parenthesised expressions; '^' binds tighter than '*' and '/', which bind
/// tighter than '+' and '-'; unary minus allowed; division only by nonzero
/// constants. Decimals are read exactly. Throws ParseError with the position
/// and the expected tokens.
ParsedPolynomial parse_polynomial(const std::string& text);

/// Parses and requires a univariate polynomial.
RatPoly parse_univariate(const std::string& text);
/// Parses and requires a polynomial involving y.
BiPoly parse_bivariate(const std::string& text);

}  // namespace monokit
