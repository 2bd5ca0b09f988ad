#pragma once

#include <string_view>

#include "arrtop/polynomial.hpp"

namespace arrtop {

/// Parses a polynomial in x and y. Grammar:
///
///     expr   := term (('+' | '-') term)*
///     term   := unary (('*' | '/') unary)*      division by constants only
///     unary  := ('+' | '-') unary | power
///     power  := atom ('^' integer)?
///     atom   := integer | 'x' | 'y' | '(' expr ')'
///
/// Throws InputError naming the offending column.
BiPoly parse_curve(std::string_view text);

}  // namespace arrtop
