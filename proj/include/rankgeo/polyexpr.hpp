#ifndef RANKGEO_POLYEXPR_HPP
#define RANKGEO_POLYEXPR_HPP

#include <string>
#include <vector>

#include "rankgeo/linpoly.hpp"
#include "rankgeo/macwilliams.hpp"

namespace rankgeo {

// Grammar:
//   expression := term ("+" term)*
//   term       := [coef "*"] var
//   var        := "x" | "x^q^" INT
//   coef       := "g^" INT | INT | "[" digit-list "]"
// Whitespace is insignificant. INT coefficients embed via the prime field;
// "[d0,d1,...]" gives explicit power-basis digits (constant term first).
LinearizedPoly parse_linearized(const std::string& text, FieldPtr ctx);

// Canonical text form; parse_linearized(render_linearized(f)) == f.
std::string render_linearized(const LinearizedPoly& f);

// Integer polynomials in q with +, -, *, / (exact), ^, parentheses and
// implicit multiplication by juxtaposition, e.g. "(q^5-1)(q^5-q^2)/(q-1)".
IntPolynomial parse_qpoly(const std::string& text);

// Semicolon-separated list of the above.
std::vector<IntPolynomial> parse_qpoly_list(const std::string& text);

}  // namespace rankgeo

#endif
