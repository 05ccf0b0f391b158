#pragma once

// Points of the affine plane and finite common zero sets of bivariate systems.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polarweb/mpoly.hpp"
#include "polarweb/numerics.hpp"

namespace polarweb {

class PositiveDimensional : public PolyError {
 public:
  using PolyError::PolyError;
};

/// A point of the affine chart: exact when both coordinates are rational,
/// otherwise a numeric approximation. The approximation is always filled.
struct AffinePoint {
  bool exact = true;
  Rational a, b;
  Complex za, zb;

  static AffinePoint rational(const Rational& a, const Rational& b);
  static AffinePoint numeric(Complex a, Complex b);

  std::string str() const;
};

/// "%.12g" rendering; parts below 1e-12 |z| print as zero.
std::string format_complex(Complex z);

/// Exact equality for exact points, 1e-7 relative closeness otherwise.
bool same_point(const AffinePoint& p, const AffinePoint& q, double tol = 1e-7);

/// Fast floating-point evaluation of a polynomial in two variables.
class NumBivariate {
 public:
  NumBivariate() = default;
  explicit NumBivariate(const MPoly& f, std::string_view x = "x", std::string_view y = "y");

  Complex operator()(Complex x, Complex y) const;
  /// Coefficients of f(x0, Y) in ascending powers of Y.
  CPoly in_y(Complex x0) const;
  CPoly in_x(Complex y0) const;
  /// |f(x,y)| / sum |c| |x|^i |y|^j.
  double relative_residual(Complex x, Complex y) const;
  int degree_y() const { return degree_y_; }

 private:
  struct Term {
    int i, j;
    double c;
  };
  std::vector<Term> terms_;
  int degree_x_ = 0, degree_y_ = 0;
};

/// Complex value of a polynomial whose every variable is assigned.
Complex evaluate_complex(const MPoly& f, const std::map<std::string, Complex>& values);

/// |f(v)| / sum over terms of |c| prod |v_i|^e_i, for a full assignment.
double relative_residual(const MPoly& f, const std::map<std::string, Complex>& values);

/// Univariate polynomial in v as floating-point coefficients.
CPoly to_cpoly(const MPoly& f, std::string_view v);

/// Nearest rational with denominator at most max_den (continued fractions).
std::vector<Rational> convergents(double value, long max_den = 100000000);

struct UnivariateRoots {
  std::vector<Rational> rational;  // exact, distinct
  std::vector<Complex> numeric;    // the remaining roots, distinct
};
/// Distinct roots of a nonzero univariate polynomial in v. Rational roots
/// are recovered by reconstruction and confirmed exactly.
UnivariateRoots univariate_distinct_roots(const MPoly& f, std::string_view v);

/// Relative residual of f at p (0 for exact zeros at exact points).
double residual_at(const MPoly& f, const AffinePoint& p);
/// Exact vanishing at exact points, relative residual below tol otherwise.
bool vanishes_at(const MPoly& f, const AffinePoint& p, double tol = 1e-9);

/// The i-th shear coefficient of the fixed search sequence 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ...
Rational shear_candidate(int i);

struct SolveOptions {
  double accept_residual = 1e-8;
  double cluster_tol = 1e-6;
};

/// Common zeros of polynomials in (x, y) with a finite zero set. Throws
/// PositiveDimensional when the polynomials share a nonconstant factor.
std::vector<AffinePoint> common_zeros(const std::vector<MPoly>& polys, const SolveOptions& opt = {});

}  // namespace polarweb
