#pragma once

// Floating-point root finding, root continuation along loops and
// monodromy orbits of branched covers.

#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarweb {

using Complex = std::complex<double>;
/// Coefficients in ascending order of powers.
using CPoly = std::vector<Complex>;

/// Base class of every floating-point failure; the CLI maps it to exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrackingAbort : public NumericError {
 public:
  using NumericError::NumericError;
};

struct RootOptions {
  double residual_tol = 1e-9;
  int max_iterations = 500;
  double leading_tol = 1e-12;
  /// Skip the leading_tol test: the caller knows the leading coefficient is
  /// exactly nonzero (it comes from an exact polynomial).
  bool exact_leading = false;
};
inline const RootOptions kExactLeading{1e-9, 500, 1e-12, true};

Complex horner(const CPoly& p, Complex z);
CPoly derivative(const CPoly& p);
/// |p(z)| / sum |c_i| |z|^i, the backward error of z as a root.
double relative_residual(const CPoly& p, Complex z);

/// All roots with multiplicity (Aberth-Ehrlich iteration).
std::vector<Complex> univariate_roots(const CPoly& p, const RootOptions& opt = {});

/// Groups roots closer than `tol * (1 + |z|)` and returns (mean, count).
std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots, double tol);

using Family = std::function<CPoly(Complex)>;

struct TrackOptions {
  /// Each root may move at most min-separation / step_ratio per step.
  double step_ratio = 3.0;
  double residual_tol = 1e-9;
  double min_step = 1e-10;
  int circle_vertices = 48;
  int newton_iterations = 12;
};

struct TrackCertificate {
  double min_separation = std::numeric_limits<double>::infinity();
  /// Largest observed (root displacement / separation) over accepted steps.
  double max_step_ratio = 0.0;
  double max_residual = 0.0;
  long steps = 0;
};

struct TrackResult {
  std::vector<Complex> end_roots;  // end_roots[i] continues start_roots[i]
  TrackCertificate certificate;
};

/// Continues start_roots along the polyline `path` (a loop if the last vertex
/// equals the first). Throws TrackingAbort when a step cannot be certified.
TrackResult track_roots(const Family& family, const std::vector<Complex>& path,
                        const std::vector<Complex>& start_roots, const TrackOptions& opt = {});

/// perm[i] = j with end[i] matching start[j]; throws when the match is ambiguous.
std::vector<int> match_roots(const std::vector<Complex>& end, const std::vector<Complex>& start);

struct MonodromyResult {
  int degree = 0;
  int loops_traced = 0;
  /// Orbits of the sheet indices 0..degree-1, each sorted, sorted by first element.
  std::vector<std::vector<int>> partition;
  std::vector<std::vector<int>> permutations;
  double min_separation = std::numeric_limits<double>::infinity();
  double max_step_ratio = 0.0;
  double max_residual = 0.0;
  std::vector<Complex> base_roots;
};

/// Lasso loop around `branch` starting and ending at `base`.
std::vector<Complex> lasso(Complex base, Complex branch, double radius, int vertices);

/// Traces one lasso per branch point (in the given order), composes the
/// permutations and returns the orbit partition of the sheets.
MonodromyResult monodromy_partition(const Family& cover, Complex base_point,
                                    const std::vector<Complex>& branch_points,
                                    const TrackOptions& opt = {});

}  // namespace polarweb
