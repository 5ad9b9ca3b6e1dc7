#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pfgame/expr.hpp"

namespace pfgame {

/// Syntax or semantic error in an operator or tensor description. Line and
/// column are 1-based; 0 means "not tied to a position".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// Message without the position prefix.
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

/// Parses a single coordinate expression, e.g. "min(x1, -1 + avg(0.5:x1, 0.5:x3))".
/// Variables are 1-based in the text; every index must be <= n.
Expr parse_expr(std::string_view text, std::size_t n);

/// Parses an operator file:
///
///     operator n=3
///     T1 := min(avg(0.5:x1, 0.5:x2), -1 + avg(0.5:x1, 0.5:x3))
///     ...
///
/// '#' starts a comment. Every coordinate must be defined exactly once.
Operator parse_operator(std::string_view text);

}  // namespace pfgame
