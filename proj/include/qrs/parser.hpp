#pragma once

#include <string>
#include <string_view>

#include "qrs/element.hpp"

namespace qrs {

// Expression grammar (whitespace-insensitive):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := ['-'] atom ['^' exponent]
//   atom     := generator | scalarlit | '(' expr ')'
//   exponent := integer | '(' rational ')'
//   scalarlit := integer | 'r' | 's'
// '*' is mandatory between factors; rational exponents are accepted only on
// r and s and only with denominator 1 or 3. Noncommutative products read
// left to right. Parsing normalizes, so the result is a canonical Element.
Element parse(std::string_view text, SigPtr sig);

// Parses an expression that must denote a pure scalar (no generators).
Scalar parse_scalar(std::string_view text);

// Deterministic textual form in normal order; parse(render(x)) == x.
std::string render(const Element& x);
std::string render(const Scalar& c);

// Renders the generator part of a monomial ("E1^2*E3", or "1" when empty).
std::string render_monomial(const AlgebraSignature& sig, const Monomial& m);

}  // namespace qrs
