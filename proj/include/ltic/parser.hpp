#pragma once

#include <string>
#include <string_view>

#include "ltic/system.hpp"

namespace ltic {

/// Parses `y = <expr>`. Grammar:
///
///     system := "y" "=" expr
///     expr   := term { ("+" | "-") term }
///     term   := unary { ("*" | "/") unary }
///     unary  := "-" unary | factor
///     factor := NUMBER | PARAM | "t" | "x" | "y"
///             | "D" "[" expr "," INT "]" | "I" "[" expr "]"
///             | FUNC "(" expr ")" | "(" expr ")"
///
/// PARAM is a lowercase identifier ([a-z][a-z0-9_]*) other than t, x, y and
/// the FUNC names sin, exp, abs, sq. NUMBER is an integer or decimal literal,
/// converted to an exact rational. Throws ParseError at the first offending
/// token.
SystemDef parse_system(std::string_view text);

/// Parses a bare right-hand-side expression with the same grammar.
SignalExpr parse_expr(std::string_view text);

/// Canonical text: "y = " followed by the normalized right-hand side.
std::string format_system(const SystemDef& sys);

}  // namespace ltic
