#pragma once

// Counting irreducible components by monodromy of line-section covers.

#include <vector>

#include "polarweb/numerics.hpp"
#include "polarweb/rng.hpp"
#include "polarweb/web.hpp"

namespace polarweb {

struct ComponentCount {
  int components = 0;
  /// True when the input polynomial was square-free.
  bool reduced = true;
  int degree = 0;
  Rational shear;
  std::vector<Complex> branch_points;
  Complex base_point;
  /// Tracking aborts recovered by moving the base point.
  int base_retries = 0;
  MonodromyResult monodromy;
};

/// Components of the reduced curve f = 0, via the cover (x, y) -> x after a
/// random shear x -> x + c*y.
ComponentCount curve_components(const MPoly& f, Rng& rng, const TrackOptions& opt = {});

/// Components of the surface of tangent directions of w, restricted to a
/// random line.
ComponentCount web_components(const SymWeb& w, Rng& rng, const TrackOptions& opt = {});

}  // namespace polarweb
