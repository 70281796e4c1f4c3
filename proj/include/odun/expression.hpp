#pragma once

#include <string_view>

#include "odun/schur.hpp"

namespace odun {

/// Evaluates a symmetric-function expression in the Schur basis.
///
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := integer | '-' factor | '(' expr ')' | h[k] | e[k] | p[k] | s[parts]
///
/// e.g. "h[1]*h[2]", "s[2,2]*s[2,1] + 2*p[3]". Throws std::invalid_argument
/// with the offending position on a syntax error.
SchurPolynomial parse_expression(std::string_view text);

}  // namespace odun
