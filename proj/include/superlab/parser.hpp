#pragma once

#include <string_view>

#include "superlab/polynomial.hpp"

namespace superlab {

/// Parses a polynomial expression over `ring`.
///
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" UINT)?
///   base   := INT | INT "/" UINT | VAR | "(" expr ")"
///
/// Whitespace is ignored; juxtaposition ("2x") is a syntax error. Throws
/// ParseError (with byte offset) or InputError.
template <class F>
Polynomial<F> parse_poly(std::string_view text, const RingPtr<F>& ring);

}  // namespace superlab
