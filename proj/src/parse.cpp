#include "polarweb/parse.hpp"

#include <array>
#include <cctype>

namespace polarweb {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      message_(what),
      line_(line),
      column_(column) {}

namespace {

constexpr std::array<std::string_view, 7> kVariables = {"x", "y", "a", "b", "dx", "dy", "t"};

class Parser {
 public:
  Parser(std::string_view text, int line) : text_(text), line_(line) {}

  MPoly parse() {
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MPoly expr() {
    MPoly acc = term();
    while (true) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc *= Rational(1) / d.constant_term();
      } else {
        check_no_juxtaposition();
        return acc;
      }
    }
  }

  void check_no_juxtaposition() {
    const char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
      fail("implicit multiplication is not allowed; use '*'");
    }
  }

  MPoly unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 10) fail("exponent too large");
      const long long e = std::stoll(digits);
      if (e >= static_cast<long long>(kMaxExponent)) fail("exponent exceeds 2^31");
      return base.pow(static_cast<long>(e));
    }
    return base;
  }

  MPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        fail("implicit multiplication is not allowed; use '*'");
      }
      return MPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (auto v : kVariables) {
        if (v == name) return MPoly::var(name);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, int line) { return Parser(text, line).parse(); }

Rational parse_rational(std::string_view text) {
  MPoly p = parse_poly(text);
  if (!p.is_constant()) throw ParseError("expected a rational number", 1, 1);
  return p.constant_term();
}

std::pair<Rational, Rational> parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected 'p,q'", 1, 1);
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace polarweb
