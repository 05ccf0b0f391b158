#pragma once

// Local invariants of plane curve germs and the genus of plane curves.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polarweb/polar.hpp"
#include "polarweb/rng.hpp"

namespace polarweb {

class LocalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariants that disagree with each other; always a bug, never a result.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Floating-point coefficient with the sum of the magnitudes that produced
/// it, so cancellation can be told apart from a genuine small value.
struct NumCoeff {
  Complex value;
  double scale = 0;
};

struct GermOptions {
  /// |value| <= zero_tol * scale counts as zero.
  double zero_tol = 1e-7;
  double cluster_tol = 1e-6;
  int max_depth = 50;
};

/// A curve germ at the origin, exact or numeric.
struct Germ {
  using Key = std::pair<int, int>;  // exponents of x and y
  bool exact = true;
  std::map<Key, Rational> terms;
  std::map<Key, NumCoeff> num_terms;

  /// f translated so that p becomes the origin.
  static Germ at(const MPoly& f, const AffinePoint& p, const GermOptions& opt = {});
  Germ to_numeric() const;

  /// Order of the lowest nonzero jet; 0 off the curve, -1 for the zero germ.
  int multiplicity() const;
  /// Order of g(0, y) and of g(x, 0); -1 when identically zero.
  int order_y() const;
  int order_x() const;
  std::string str() const;
};

struct BlowUpPoint {
  /// (1 : t) is the point t of the chart (x, x*y); (0 : 1) is the origin of
  /// the chart (x*y, y).
  Direction direction;
  /// Multiplicity of the direction in the initial form, which is also the
  /// intersection number of the strict transform with the exceptional line.
  int intersection = 0;
  Germ strict;
};
std::vector<BlowUpPoint> blow_up_germ(const Germ& g, const GermOptions& opt = {});

/// Sorted multiplicities of the linear factors of the initial form.
std::vector<int> cone_pattern(const Germ& g, const GermOptions& opt = {});

struct Resolution {
  /// Multiplicities of the root and of every non-final infinitely near
  /// point, depth first, sibling subtrees in descending lexicographic order.
  std::vector<int> sequence;
  int branches = 0;
  /// Sum of m(m-1)/2 over the sequence.
  int delta = 0;
  int depth = 0;
  bool exact = true;
};
/// Blows up until every strict transform is smooth and meets the exceptional
/// locus transversally at a point lying on only one exceptional curve.
Resolution resolve(const Germ& g, const GermOptions& opt = {});

int local_multiplicity(const MPoly& f, const AffinePoint& q, const GermOptions& opt = {});

/// Local intersection number at q of two curves without a common component
/// through q. Exact for rational q; for irrational q the multiplicity is read
/// off the exact square-free decomposition of a resultant.
int intersection_multiplicity(const MPoly& f, const MPoly& g, const AffinePoint& q);

/// I_q(f_x, f_y).
int milnor_number(const MPoly& f, const AffinePoint& q);

struct GermFingerprint {
  int m = 0;
  int mu = 0;
  int r = 0;
  int delta = 0;
  std::vector<int> mult_sequence;
  std::vector<int> cone_pattern;
  bool exact = true;

  /// Compares the invariants; ignores `exact`.
  bool operator==(const GermFingerprint& o) const;
  bool operator!=(const GermFingerprint& o) const { return !(*this == o); }
  std::string str() const;
};
/// Fingerprint of the reduced curve f = 0 at q. Throws InternalError when
/// the two computations of delta disagree.
GermFingerprint fingerprint(const MPoly& f, const AffinePoint& q, const GermOptions& opt = {});

// Points at infinity.

/// Z^n f(X/Z, Y/Z) in the variables x, y, z, n the total degree.
MPoly homogenize(const MPoly& f);

enum class Chart { affine, x_one, y_one };
/// F(x, y, 1), F(1, x, y) or F(x, 1, y) for homogeneous F in x, y, z.
MPoly chart_poly(const MPoly& homogeneous, Chart chart);

struct CurvePoint {
  ProjPoint point;
  Chart chart = Chart::affine;
  AffinePoint local;  // coordinates in the chart
};
std::string chart_name(Chart chart);

/// Singular points of f = 0 on the line at infinity.
std::vector<CurvePoint> singular_points_at_infinity(const MPoly& f);
/// Affine singular points followed by those at infinity.
std::vector<CurvePoint> projective_singular_points(const MPoly& f);

enum class GenusMode { affine, projective };

struct GenusResult {
  int genus = 0;
  int degree = 0;
  std::vector<std::pair<CurvePoint, GermFingerprint>> points;
  bool exact = true;
};
/// (n-1)(n-2)/2 minus the delta invariants of the singular points. Throws
/// LocalError for reducible or non-reduced curves.
GenusResult genus_of_curve(const MPoly& f, GenusMode mode, Rng& rng);

}  // namespace polarweb
