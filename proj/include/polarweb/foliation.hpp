#pragma once

// Foliations: inflexion divisor, quasi-radial singularities, class of curves.

#include <optional>
#include <string>
#include <vector>

#include "polarweb/localsing.hpp"

namespace polarweb {

struct InflexionDivisor {
  /// E vanishes identically: every leaf is a line.
  bool all_leaves_lines = false;
  /// B^2 A_y + A B A_x - A^2 B_x - A B B_y.
  MPoly raw;
  PlaneCurve curve;  // valid when !all_leaves_lines
};
InflexionDivisor inflexion_divisor(const Foliation& f);

struct SingularityClass {
  AffinePoint point;
  /// Order k of the first nonzero jet (A_k, B_k) at the point.
  int jet_order = 0;
  bool quasi_radial = false;
  /// P with A_k = x P, B_k = y P in coordinates centred at the point; exact
  /// points only.
  std::optional<MPoly> cofactor;
  bool exact = true;
  /// Largest relative coefficient of y A_k - x B_k (0 in exact mode).
  double criterion_residual = 0;
};
/// Throws WebError when q is not a singular point.
SingularityClass classify_singularity(const Foliation& f, const AffinePoint& q);

struct ConeLine {
  AffinePoint q;
  AffinePoint p;
  bool quasi_radial = false;
  /// Order of the tangent cone of P_p at q.
  int cone_order = 0;
  /// Multiplicity of the line through p and q as a factor of the cone.
  int line_multiplicity = 0;
  /// 1 at quasi-radial points, 0 otherwise.
  int expected = 0;
  /// The centre is special for this point and the prediction does not apply.
  bool degenerate = false;
  std::string reason;
};
ConeLine tangent_cone_line(const Foliation& f, const SingularityClass& sc, const AffinePoint& p);

struct InflexionTest {
  bool inflexion = false;
  bool exact = true;
  /// |t^T H t| relative to its magnitude (numeric mode).
  double residual = 0;
};
/// Whether the Hessian of C at the smooth point p vanishes on the tangent
/// direction. Throws WebError at singular points.
InflexionTest is_inflexion_point(const MPoly& C, const AffinePoint& p);
/// The same test for the polar P_p at its own centre; p may be irrational.
InflexionTest polar_inflexion_at_center(const Foliation& f, const AffinePoint& p);

struct CurveSample {
  AffinePoint point;
  std::string strategy;
};
/// Points of the curve e = 0: rational points from random lines, horizontal
/// and vertical lines and lines through rational points already found, then
/// numeric points on random lines when not enough rational ones turn up.
std::vector<CurveSample> points_on_curve(const MPoly& e, Rng& rng, int wanted, int tries = 50);

/// The foliation in the chart x = 1 (coordinates y/x, 1/x) or y = 1
/// (coordinates x/y, 1/y), saturated.
Foliation foliation_chart(const Foliation& f, Chart chart);

struct FoliationSingularity {
  ProjPoint point;
  Chart chart = Chart::affine;
  AffinePoint local;
  SingularityClass cls;
};
/// Singular points with their classification; affine first.
std::vector<FoliationSingularity> foliation_singularities(const Foliation& f, bool include_infinity = true);

struct CurveClass {
  int value = 0;
  int degree = 0;
  /// One entry per auxiliary point used.
  std::vector<AffinePoint> aux_points;
  std::vector<int> values;
  /// Sum over singular points of I_q(C, polar).
  std::vector<int> singular_contributions;
  bool consistent = true;
  bool exact = true;
};
/// Degree of the dual curve of the reduced curve c = 0, degree >= 2:
/// n(n-1) minus the intersections of C with a generic polar at Sing(C).
CurveClass class_of_curve(const MPoly& c, Rng& rng, int samples = 2);

}  // namespace polarweb
