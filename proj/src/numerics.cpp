#include "polarweb/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polarweb {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double min_separation(const std::vector<Complex>& z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) best = std::min(best, std::abs(z[i] - z[j]));
  }
  return best;
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

Complex horner(const CPoly& p, Complex z) {
  Complex acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CPoly derivative(const CPoly& p) {
  if (p.size() <= 1) return {};
  CPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
  return d;
}

double relative_residual(const CPoly& p, Complex z) {
  const double r = std::abs(z);
  double scale = 0;
  double power = 1;
  for (const Complex& c : p) {
    scale += std::abs(c) * power;
    power *= r;
  }
  if (scale == 0) return 0;
  return std::abs(horner(p, z)) / scale;
}

std::vector<Complex> univariate_roots(const CPoly& input, const RootOptions& opt) {
  CPoly p = input;
  while (!p.empty() && p.back() == Complex(0)) p.pop_back();
  if (p.size() < 2) throw NumericError("univariate_roots: polynomial of degree < 1");
  for (const Complex& c : p) {
    if (!finite(c)) throw NumericError("univariate_roots: non-finite coefficient");
  }
  double norm = 0;
  for (const Complex& c : p) norm = std::max(norm, std::abs(c));
  if (!opt.exact_leading && std::abs(p.back()) <= opt.leading_tol * norm) {
    throw NumericError("univariate_roots: leading coefficient underflow");
  }

  std::vector<Complex> roots;
  std::size_t zeros = 0;
  while (p[zeros] == Complex(0)) ++zeros;
  roots.assign(zeros, Complex(0));
  p.erase(p.begin(), p.begin() + static_cast<long>(zeros));

  const int n = static_cast<int>(p.size()) - 1;
  if (n == 0) return roots;

  // Rescale z = rho*w with rho the geometric mean of the root moduli, so the
  // extreme coefficients balance; done in logarithms to avoid overflow.
  const double log_rho = (std::log(std::abs(p[0])) - std::log(std::abs(p[n]))) / n;
  std::vector<double> logs(n + 1, -std::numeric_limits<double>::infinity());
  double top = logs[0];
  for (int i = 0; i <= n; ++i) {
    if (p[i] == Complex(0)) continue;
    logs[i] = std::log(std::abs(p[i])) + i * log_rho;
    top = std::max(top, logs[i]);
  }
  for (int i = 0; i <= n; ++i) {
    p[i] = p[i] == Complex(0) ? Complex(0) : p[i] / std::abs(p[i]) * std::exp(logs[i] - top);
  }
  if (!(std::abs(p.back()) > 0)) throw NumericError("univariate_roots: leading coefficient underflow");
  const double rho = std::exp(log_rho);
  if (n == 1) {
    roots.push_back(-p[0] / p[1] * rho);
    return roots;
  }

  // Starting points on a circle whose radius is the geometric mean of the
  // root moduli, rotated off the real axis to avoid symmetric stalls.
  const double radius = std::pow(std::abs(p[0]) / std::abs(p[n]), 1.0 / n);
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) {
    const double angle = 2 * kPi * i / n + 0.4;
    z[i] = std::polar(radius, angle);
  }
  const CPoly dp = derivative(p);
  std::vector<bool> done(n, false);
  const double stop = 4 * std::numeric_limits<double>::epsilon();
  int iteration = 0;
  for (; iteration < opt.max_iterations; ++iteration) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Complex pv = horner(p, z[i]);
      if (relative_residual(p, z[i]) < stop) {
        done[i] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = pv / horner(dp, z[i]);
      Complex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += Complex(1) / (z[i] - z[j]);
      }
      const Complex step = ratio / (Complex(1) - ratio * sum);
      if (!finite(step)) {
        z[i] += Complex(1e-8 * (1 + std::abs(z[i])), 1e-8);
        continue;
      }
      z[i] -= step;
      if (std::abs(step) <= stop * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }
  for (int i = 0; i < n; ++i) {
    if (!finite(z[i]) || relative_residual(p, z[i]) >= opt.residual_tol) {
      throw NumericError("univariate_roots: no convergence after " +
                         std::to_string(opt.max_iterations) + " iterations");
    }
  }
  for (const Complex& w : z) roots.push_back(w * rho);
  return roots;
}

std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots, double tol) {
  const int n = static_cast<int>(roots.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double scale = 1 + std::max(std::abs(roots[i]), std::abs(roots[j]));
      if (std::abs(roots[i] - roots[j]) <= tol * scale) {
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  }
  std::vector<std::pair<Complex, int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find_root(parent, i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back(Complex(0), 0);
    }
    out[slot[r]].first += roots[i];
    out[slot[r]].second += 1;
  }
  for (auto& [z, count] : out) z /= static_cast<double>(count);
  return out;
}

TrackResult track_roots(const Family& family, const std::vector<Complex>& path,
                        const std::vector<Complex>& start_roots, const TrackOptions& opt) {
  TrackResult result;
  std::vector<Complex> z = start_roots;
  const std::size_t n = z.size();
  if (path.empty()) throw TrackingAbort("track_roots: empty path");
  if (n > 1) {
    result.certificate.min_separation = min_separation(z);
    if (result.certificate.min_separation == 0) {
      throw TrackingAbort("track_roots: start roots are not distinct");
    }
  }

  for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
    const Complex s0 = path[seg];
    const Complex s1 = path[seg + 1];
    const double length = std::abs(s1 - s0);
    if (length == 0) continue;
    double tau = 0;
    double h = 1;
    while (tau < 1) {
      h = std::min(h, 1 - tau);
      const double sep = n > 1 ? min_separation(z) : std::numeric_limits<double>::infinity();
      const Complex s = s0 + (s1 - s0) * (tau + h);
      const CPoly p = family(s);
      const CPoly dp = derivative(p);
      std::vector<Complex> next = z;
      bool ok = true;
      double ratio = 0;
      double residual = 0;
      for (std::size_t i = 0; i < n && ok; ++i) {
        Complex w = next[i];
        for (int it = 0; it < opt.newton_iterations; ++it) {
          const Complex d = horner(dp, w);
          if (d == Complex(0)) {
            ok = false;
            break;
          }
          const Complex step = horner(p, w) / d;
          w -= step;
          if (!finite(w)) {
            ok = false;
            break;
          }
          if (std::abs(step) <= 1e-15 * (1 + std::abs(w))) break;
        }
        if (!ok) break;
        const double r = relative_residual(p, w);
        const double moved = std::abs(w - z[i]);
        if (r >= opt.residual_tol || moved * opt.step_ratio >= sep) {
          ok = false;
          break;
        }
        ratio = std::max(ratio, moved / sep);
        residual = std::max(residual, r);
        next[i] = w;
      }
      if (ok && n > 1) {
        const double new_sep = min_separation(next);
        if (new_sep * opt.step_ratio < sep) ok = false;  // two roots collapsed onto one
      }
      if (!ok) {
        h /= 2;
        if (h * length < opt.min_step) {
          throw TrackingAbort("loop too close to branch point near s = (" +
                              std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")");
        }
        continue;
      }
      z = std::move(next);
      tau += h;
      h *= 2;
      auto& cert = result.certificate;
      cert.steps += 1;
      cert.max_step_ratio = std::max(cert.max_step_ratio, ratio);
      cert.max_residual = std::max(cert.max_residual, residual);
      if (n > 1) cert.min_separation = std::min(cert.min_separation, min_separation(z));
    }
  }
  result.end_roots = std::move(z);
  return result;
}

std::vector<int> match_roots(const std::vector<Complex>& end, const std::vector<Complex>& start) {
  const std::size_t n = start.size();
  if (end.size() != n) throw NumericError("match_roots: size mismatch");
  const double sep = n > 1 ? min_separation(start) : std::numeric_limits<double>::infinity();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::abs(end[i] - start[j]);
      if (d < dist) {
        dist = d;
        best = j;
      }
    }
    if (used[best] || (n > 1 && dist * 3 >= sep)) {
      throw NumericError("match_roots: ambiguous matching of tracked roots");
    }
    used[best] = true;
    perm[i] = static_cast<int>(best);
  }
  return perm;
}

std::vector<Complex> lasso(Complex base, Complex branch, double radius, int vertices) {
  const Complex offset = base - branch;
  const double phase = std::arg(offset);
  std::vector<Complex> path;
  path.push_back(base);
  for (int i = 0; i <= vertices; ++i) {
    const double angle = phase + 2 * kPi * i / vertices;
    path.push_back(branch + std::polar(radius, angle));
  }
  path.push_back(base);
  return path;
}

MonodromyResult monodromy_partition(const Family& cover, Complex base_point,
                                    const std::vector<Complex>& branch_points,
                                    const TrackOptions& opt) {
  MonodromyResult result;
  const CPoly base_poly = cover(base_point);
  result.base_roots = univariate_roots(base_poly);
  const int k = static_cast<int>(result.base_roots.size());
  result.degree = k;
  if (k > 1 && min_separation(result.base_roots) <= 1e-8 * (1 + std::abs(base_point))) {
    throw NumericError("monodromy_partition: roots at the base point are not distinct");
  }

  double spread = 0;
  for (const Complex& b : branch_points) {
    for (const Complex& c : branch_points) spread = std::max(spread, std::abs(b - c));
  }
  const double delta0 = 1e-3 * std::max(spread, 1.0);
  for (const Complex& b : branch_points) {
    if (std::abs(b - base_point) <= delta0) {
      throw NumericError("monodromy_partition: base point too close to a branch point");
    }
  }

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t bi = 0; bi < branch_points.size(); ++bi) {
    const Complex b = branch_points[bi];
    double radius = std::abs(b - base_point);
    for (std::size_t j = 0; j < branch_points.size(); ++j) {
      if (j != bi) radius = std::min(radius, std::abs(b - branch_points[j]));
    }
    radius /= 2;
    const auto path = lasso(base_point, b, radius, opt.circle_vertices);
    const TrackResult tr = track_roots(cover, path, result.base_roots, opt);
    const std::vector<int> perm = match_roots(tr.end_roots, result.base_roots);
    for (int i = 0; i < k; ++i) parent[find_root(parent, i)] = find_root(parent, perm[i]);
    result.permutations.push_back(perm);
    result.loops_traced += 1;
    result.min_separation = std::min(result.min_separation, tr.certificate.min_separation);
    result.max_step_ratio = std::max(result.max_step_ratio, tr.certificate.max_step_ratio);
    result.max_residual = std::max(result.max_residual, tr.certificate.max_residual);
  }

  std::vector<std::vector<int>> blocks(k);
  for (int i = 0; i < k; ++i) blocks[find_root(parent, i)].push_back(i);
  for (auto& b : blocks) {
    if (!b.empty()) result.partition.push_back(std::move(b));
  }
  std::sort(result.partition.begin(), result.partition.end());
  return result;
}

}  // namespace polarweb
