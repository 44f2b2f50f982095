#pragma once

#include <string_view>

namespace obslab {

/// Evaluates a real arithmetic expression such as "3*pi/4" or "sqrt(2) - 1".
/// Grammar: + - * / ^ (right associative), unary minus, parentheses, decimal
/// literals, the constant pi, and the functions sqrt, sin, cos.
/// Throws ConfigError on malformed input or a non-finite result.
double evaluate_expression(std::string_view text);

}  // namespace obslab
