#pragma once

// Polynomial text syntax: integer or rational coefficients, the variables
// x, y, a, b, dx, dy, t, operators + - * / ^ and parentheses. `^` binds
// tightest and takes a non-negative integer exponent; `/` only divides by
// constants; juxtaposition is not multiplication.

#include <stdexcept>
#include <string>
#include <string_view>

#include "polarweb/mpoly.hpp"

namespace polarweb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  /// The diagnostic without its position prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// Parses one polynomial. `line` is only used for diagnostics.
MPoly parse_poly(std::string_view text, int line = 1);

/// Parses "p,q" where p and q are integers or fractions.
std::pair<Rational, Rational> parse_point(std::string_view text);

Rational parse_rational(std::string_view text);

}  // namespace polarweb
