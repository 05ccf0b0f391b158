#pragma once

// Webs and foliations on the affine chart of the projective plane, and
// reduced plane curves.

#include <optional>
#include <string>
#include <vector>

#include "polarweb/mpoly.hpp"
#include "polarweb/rng.hpp"
#include "polarweb/solve.hpp"

namespace polarweb {

class WebError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A k-web: a form homogeneous of degree k in (dx, dy) with coefficients in
/// Q[x, y] whose coefficients have no common factor.
class SymWeb {
 public:
  /// Validates homogeneity and primitivity. A common factor of the
  /// coefficients is divided out and returned through `removed` if given,
  /// otherwise it is an error.
  static SymWeb from_form(const MPoly& form, MPoly* removed = nullptr);

  const MPoly& form() const { return form_; }
  int k() const { return k_; }
  /// The coefficient a_i of dx^(k-i) dy^i, for i = 0..k.
  const std::vector<MPoly>& coefficients() const { return coeffs_; }
  /// Whether the discriminant is not identically zero.
  bool square_free() const { return !discriminant_.is_zero(); }
  /// discriminant_binary(form), computed once on construction.
  const MPoly& discriminant() const { return discriminant_; }
  std::string str() const { return form_.str(); }

 private:
  MPoly form_;
  int k_ = 0;
  std::vector<MPoly> coeffs_;
  MPoly discriminant_;
};

/// The vector field A d/dx + B d/dy, saturated so that gcd(A, B) = 1.
struct Foliation {
  MPoly A, B;
  /// The common factor divided out on construction (1 when none).
  MPoly removed = MPoly(1);
  SymWeb web;  // A dy - B dx

  static Foliation from_field(const MPoly& A, const MPoly& B);
  /// Recovers (A, B) from a degree-one form a0 dx + a1 dy.
  static Foliation from_web(const SymWeb& w);
};

/// A reduced affine plane curve. `original` keeps the polynomial an
/// operation produced, `defining` its canonical square-free part.
struct PlaneCurve {
  MPoly defining;
  MPoly original;

  static PlaneCurve from_poly(const MPoly& f);
  int degree() const { return original.total_degree(); }
  bool is_empty() const { return defining.is_constant(); }
};

/// W1 ⊠ W2: the web defined by the product of the forms.
struct Superposition {
  SymWeb web;
  bool square_free = true;
};
Superposition superpose(const SymWeb& w1, const SymWeb& w2);

/// Degree of tangency with a generic line, sampled over random rational lines.
int web_degree(const SymWeb& w, Rng& rng);

struct SingularSet {
  std::vector<AffinePoint> points;
  std::vector<MPoly> generators;  // the coefficients a_i
};
SingularSet singular_set(const SymWeb& w);

/// Reduced discriminant curve; the constant curve 1 when empty.
PlaneCurve discriminant_curve(const SymWeb& w);
/// Raw discriminant of the form before reduction.
MPoly discriminant_poly(const SymWeb& w);

/// A projective direction (u : v), normalized to (1 : m) or (0 : 1).
struct Direction {
  bool exact = true;
  Rational u, v;
  Complex zu, zv;

  static Direction rational(const Rational& u, const Rational& v);
  static Direction numeric(Complex u, Complex v);
  std::string str() const;
};
bool same_direction(const Direction& d1, const Direction& d2, double tol = 1e-9);

/// Roots (u : v) of a binary form of degree k with the given coefficients
/// c_i of u^(k-i) v^i, counted with multiplicity.
std::vector<std::pair<Direction, int>> binary_form_roots(const std::vector<Rational>& coeffs);
std::vector<std::pair<Direction, int>> binary_form_roots(const std::vector<Complex>& coeffs);

/// The k distinct leaf directions at a smooth point.
std::vector<Direction> tangent_directions(const SymWeb& w, const AffinePoint& p);

struct Smoothness {
  bool smooth = false;
  std::string reason;
};
Smoothness is_smooth_point(const SymWeb& w, const AffinePoint& p);

/// Singular points of an affine curve: common zeros of F, F_x, F_y.
std::vector<AffinePoint> curve_singular_points(const MPoly& f);

}  // namespace polarweb
