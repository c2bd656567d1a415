#pragma once

#include <string>

#include "qfrob/polynomial.hpp"
#include "qfrob/rational_function.hpp"

namespace qfrob {

/// Parses an arithmetic expression in +, -, *, /, ^, integer literals and the
/// variable q. Multiplication must be written explicitly ("4*q", never "4q");
/// ^ takes a nonnegative integer exponent. Errors carry the input position.
RationalFunction parse_rational_function(const std::string& text);

/// Same grammar; rejects values with a nontrivial denominator. Division is
/// still allowed when it cancels, e.g. "(q^2 - 1)/(q - 1)".
Polynomial parse_polynomial(const std::string& text);

/// Parses a plain rational number; rejects expressions involving q.
Rational parse_rational(const std::string& text);

}  // namespace qfrob
