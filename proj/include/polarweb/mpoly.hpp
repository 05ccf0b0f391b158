#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polarweb {

using Integer = mpz_class;
using Rational = mpq_class;

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by resultant() when an input has degree zero in the eliminated
/// variable; callers decide what the degenerate case means for them.
class DegenerateResultant : public PolyError {
 public:
  using PolyError::PolyError;
};

/// Variables are kept in one global order: x, y, a, b, dx, dy, t, then any
/// other name alphabetically. Grlex comparisons use this order.
bool variable_less(std::string_view lhs, std::string_view rhs);

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

inline constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 31;

struct GrlexLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

class MPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  /// Builds from an arbitrary variable list; variables are sorted into the
  /// global order and exponent vectors permuted accordingly.
  MPoly(std::vector<std::string> vars, const std::vector<std::pair<Monomial, Rational>>& terms);

  static MPoly var(std::string_view name);
  static MPoly term(std::string_view name, Exponent e, const Rational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree(std::string_view v) const;
  bool declares(std::string_view v) const;
  bool uses(std::string_view v) const;
  /// Variables that actually occur with a positive exponent.
  std::vector<std::string> used_vars() const;
  int var_index(std::string_view v) const;  // -1 when undeclared

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  /// Same polynomial over a superset of its variables.
  MPoly with_vars(const std::vector<std::string>& vars) const;
  /// Drops declared variables that do not occur.
  MPoly trimmed() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const Rational& c);
  MPoly pow(long n) const;

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(MPoly lhs, const Rational& c) { return lhs *= c; }
  friend MPoly operator*(const Rational& c, MPoly rhs) { return rhs *= c; }

  /// Equality as polynomials (variable lists are aligned first).
  friend bool operator==(const MPoly& lhs, const MPoly& rhs);
  friend bool operator!=(const MPoly& lhs, const MPoly& rhs) { return !(lhs == rhs); }

  /// Canonical text: terms in descending grlex order, parsable by parse_poly.
  std::string str() const;

  // Low-level access used by the algorithms in mpoly.cpp.
  void add_term(const Monomial& m, const Rational& c);
  TermMap& mutable_terms() { return terms_; }
  static MPoly from_terms(std::vector<std::string> sorted_vars, TermMap terms);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Aligns two polynomials onto the union of their variables.
std::pair<MPoly, MPoly> align(const MPoly& f, const MPoly& g);
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

MPoly derivative(const MPoly& f, std::string_view v);

/// Simultaneous substitution. Assignments to variables that the polynomial
/// does not declare are ignored.
MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& assignments);

/// Replaces every variable named in `values` by a rational constant.
MPoly evaluate(const MPoly& f, const std::map<std::string, Rational>& values);
/// Full exact evaluation; every occurring variable must be assigned.
Rational evaluate_exact(const MPoly& f, const std::map<std::string, Rational>& values);

/// Coefficients of f viewed as a polynomial in v (index = power of v).
std::vector<MPoly> coefficients(const MPoly& f, std::string_view v);
MPoly from_coefficients(std::string_view v, const std::vector<MPoly>& coeffs);

/// Division by a single polynomial using grlex leading terms.
struct DivResult {
  MPoly quotient;
  MPoly remainder;
};
DivResult divide(const MPoly& f, const MPoly& g);
/// Throws PolyError if g does not divide f.
MPoly exact_divide(const MPoly& f, const MPoly& g);
std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g);

/// Removes the rational content and fixes a positive grlex leading coefficient.
MPoly canonical(const MPoly& f);
/// Positive rational c with f = c * canonical(f) up to sign.
Rational rational_content(const MPoly& f);

MPoly gcd(const MPoly& f, const MPoly& g);
/// gcd of all nonzero entries; zero when every entry is zero.
MPoly gcd_all(const std::vector<MPoly>& polys);
MPoly squarefree_part(const MPoly& f);

struct GcdSquarefree {
  MPoly gcd;
  MPoly squarefree;
};
/// gcd(f, g) (or gcd(f, grad f) when g is absent) together with the
/// square-free part of f.
GcdSquarefree gcd_squarefree(const MPoly& f, const std::optional<MPoly>& g = std::nullopt);

/// Yun decomposition of a polynomial in one variable v: f = c * prod f_i^i.
std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& f, std::string_view v);

/// Pseudo-remainder lc(g)^(deg f - deg g + 1) f mod g in v.
MPoly pseudo_remainder(const MPoly& f, const MPoly& g, std::string_view v);

/// Resultant eliminating v via the subresultant PRS.
MPoly resultant(const MPoly& f, const MPoly& g, std::string_view v);

/// Discriminant of a binary form of degree k in (u, w) with polynomial
/// coefficients, normalized as Res(F(1,s), F'(1,s)) / lc after a fixed
/// unimodular change of (u, w) that keeps the formal degree; k = 1 gives 1.
MPoly discriminant_binary(const MPoly& form, std::string_view u = "dx", std::string_view w = "dy");

/// Homogeneous components of f(x + px, y + py) by total degree in (x, y);
/// index = degree. Other variables are treated as coefficients.
std::vector<MPoly> jet_decompose(const MPoly& f, const Rational& px, const Rational& py,
                                 std::string_view x = "x", std::string_view y = "y");

/// Part of f of total degree `deg` in the listed variables.
MPoly homogeneous_part(const MPoly& f, const std::vector<std::string>& vars, int deg);
/// Total degree in the listed variables (-1 for zero).
int degree_in(const MPoly& f, const std::vector<std::string>& vars);

/// f(x + px, y + py).
MPoly translate(const MPoly& f, const Rational& px, const Rational& py,
                std::string_view x = "x", std::string_view y = "y");

std::string to_string(const Rational& q);

}  // namespace polarweb
