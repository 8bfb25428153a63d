#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/laurent.hpp"

namespace xprod {

/*
 * Element literals:
 *   expr   := "0" | ["+"|"-"] term (("+"|"-") term)*
 *   term   := scalar "*" atom ["*d^" int] | atom ["*d^" int]
 *   atom   := "e" index | "1"
 *   scalar := "(" complex ")" | rational [imag] | "i" | rational ("+"|"-") [rational] imag
 *   imag   := "i" | "*i"
 * Whitespace is ignored. The unparenthesized complex form is taken greedily, so
 * "1 - i*e0" reads as (1-i)*e0; the printer always parenthesizes complex values.
 * ParseError carries the byte offset; an index outside X is a SemanticError.
 */
CrossedElement parse_element(std::string_view src, std::size_t points);
inline CrossedElement parse_element(std::string_view src, const DynSystem& sys) {
  return parse_element(src, sys.size());
}

// Terms ordered by degree, then point: "e0*d^0 - 1/2*e2*d^1 + (1+i)*e1*d^3". Zero is "0".
std::string format_element(const CrossedElement& f);

// Same grammar without "*d^"; the value sits in degree 0.
Func parse_func(std::string_view src, std::size_t points);
std::string format_func(const Func& f);

// c*t^k terms joined by + and -; a bare scalar is a constant, "t" means t^1.
// Unlike element literals, "1 + i*t" means 1 + i t (no greedy a+bi).
LaurentPoly parse_poly(std::string_view src);
std::string format_poly(const LaurentPoly& p);

// Comma separated scalars, each possibly parenthesized: "2, 1/2, (1+i)".
std::vector<Scalar> parse_scalar_list(std::string_view src);
// Comma separated point indices, optional brackets: "0,1" or "[0, 1]".
PointSet parse_point_list(std::string_view src);

} // namespace xprod
