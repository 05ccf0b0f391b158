#pragma once

// Polar curves of webs and the polar family.

#include <optional>
#include <string>
#include <vector>

#include "polarweb/web.hpp"

namespace polarweb {

/// (x - a) dy - (y - b) dx, the radial foliation centred at (a, b).
MPoly radial_form(const Rational& a, const Rational& b);

struct PolarCurve {
  /// The substitution vanished identically: W = L_p ⊠ W'.
  bool whole_plane = false;
  /// form(x, y; x - a, y - b) before normalization.
  MPoly raw;
  PlaneCurve curve;  // valid when !whole_plane
  /// W' with form = radial_form(p) * W' (when whole_plane; 1 for W = L_p).
  std::optional<MPoly> cofactor;
};
PolarCurve polar_curve(const SymWeb& w, const Rational& a, const Rational& b);

struct PolarEquality {
  bool identical = false;  // form2 - form1 == 0
  bool divisible = false;  // radial_form(p) divides form2 - form1
  std::optional<MPoly> quotient;
  bool polars_equal = false;        // raw substitutions agree
  bool polar_curves_equal = false;  // reduced curves agree
  bool routes_agree() const { return divisible == polars_equal; }
};
PolarEquality polar_equality_criterion(const SymWeb& w1, const SymWeb& w2, const Rational& a,
                                       const Rational& b);

struct PolarFamily {
  MPoly parametric;  // in a, b, x, y
  int k = 0;
  int d = 0;
  std::vector<AffinePoint> excluded_centers;
};
PolarFamily polar_family(const SymWeb& w, Rng& rng);
/// The polar with symbolic centre and no degree computation.
MPoly parametric_polar(const SymWeb& w);

struct BasePoints {
  std::vector<MPoly> coefficients;  // coefficients of monomials a^i b^j
  std::vector<AffinePoint> points;
  std::vector<AffinePoint> outside_singular_set;
};
BasePoints base_points(const PolarFamily& family, const SymWeb& w);

/// rank([c; dc/da; dc/db]) - 1 at a rational centre, c the coefficient vector.
int family_rank_at(const MPoly& parametric, const Rational& a, const Rational& b);
/// Maximum of family_rank_at over `samples` random centres.
int family_dimension(const SymWeb& w, Rng& rng, int samples = 5);

/// A point (X : Y : Z) of the projective plane.
struct ProjPoint {
  bool exact = true;
  Rational X, Y, Z;
  Complex zX, zY, zZ;
  bool at_infinity() const;
  std::string str() const;
};
bool same_proj_point(const ProjPoint& p, const ProjPoint& q, double tol = 1e-8);

struct FamilyDegree {
  bool degenerate = false;
  std::string reason;
  int count = 0;
  std::vector<ProjPoint> points;
  /// Every intersection point x satisfies p1, p2 in P_x.
  bool cross_check = true;
  double max_residual = 0;
};
/// Intersections of the tangent lines of W at p1 with those at p2.
FamilyDegree family_degree(const SymWeb& w, const AffinePoint& p1, const AffinePoint& p2);

struct TangentCone {
  AffinePoint point;
  MPoly cone;  // in translated coordinates x, y
  std::vector<std::pair<Direction, int>> factors;
  double reconstruction_residual = 0;
};
/// Lowest jet of f at the rational point (a, b) and its linear factors.
TangentCone tangent_cone(const MPoly& f, const Rational& a, const Rational& b);

struct CenterBranches {
  TangentCone cone;
  std::vector<Direction> web_directions;
  bool k_distinct = false;
  bool match = false;
};
CenterBranches branches_at_center(const SymWeb& w, const Rational& a, const Rational& b);

}  // namespace polarweb
