#pragma once

// Input files: line-oriented "key: value" text.
//
//   type: web            # web | foliation | curve
//   form: dy^2 - x*dx^2  # webs, or foliations given as a 1-form
//   A: x^2               # foliations given as a vector field
//   B: x*y
//   curve: y^2 - x^3     # curves
//
// `#` starts a comment. Diagnostics carry line and column.

#include <optional>
#include <string>
#include <vector>

#include "polarweb/parse.hpp"
#include "polarweb/web.hpp"

namespace polarweb {

enum class InputKind { web, foliation, curve };

struct InputData {
  InputKind kind = InputKind::web;
  SymWeb web;                         // web and foliation inputs
  std::optional<Foliation> foliation;  // foliation inputs
  MPoly curve;                        // curve inputs
  std::vector<std::string> warnings;
};

/// Throws ParseError (syntax, unknown keys, missing keys) or WebError
/// rewrapped as ParseError with the offending line.
InputData parse_input(const std::string& text);
/// Reads the file; throws ParseError at line 0 when it cannot be opened.
InputData read_input(const std::string& path);

std::string kind_name(InputKind kind);

}  // namespace polarweb
