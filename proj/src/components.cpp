#include "polarweb/components.hpp"

#include <algorithm>

namespace polarweb {

ComponentCount curve_components(const MPoly& f, Rng& rng, const TrackOptions& opt) {
  if (f.is_constant()) throw PolyError("curve_components: constant polynomial");
  ComponentCount out;
  const MPoly F = canonical(squarefree_part(f)).with_vars({"x", "y"});
  out.reduced = F.total_degree() == f.total_degree();
  const int n = F.total_degree();
  out.degree = n;
  if (n == 1) {
    out.components = 1;
    return out;
  }

  const MPoly top = homogeneous_part(F, {"x", "y"}, n);
  Rational c;
  do {
    c = rng.rational();
  } while (evaluate_exact(top, {{"x", c}, {"y", 1}}) == 0);
  out.shear = c;
  const MPoly G = substitute(F, {{"x", MPoly::var("x") + c * MPoly::var("y")}});
  const MPoly disc = resultant(G, derivative(G, "y"), "y").trimmed();
  if (disc.is_zero()) throw PolyError("curve_components: discriminant vanishes identically");
  if (!disc.is_constant()) {
    out.branch_points = univariate_roots(to_cpoly(squarefree_part(disc).with_vars({"x"}), "x"), kExactLeading);
  }
  std::sort(out.branch_points.begin(), out.branch_points.end(), [](Complex u, Complex v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });

  double radius = 1;
  for (const Complex& b : out.branch_points) radius = std::max(radius, std::abs(b));
  const NumBivariate cover(G);
  const Family family = [&cover](Complex x) { return cover.in_y(x); };
  for (int attempt = 0;; ++attempt) {
    out.base_point = Complex(radius * (2 * rng.uniform_real() - 1), radius * (2 * rng.uniform_real() - 1));
    try {
      out.monodromy = monodromy_partition(family, out.base_point, out.branch_points, opt);
      break;
    } catch (const NumericError&) {
      if (attempt >= 9) throw;
      out.base_retries += 1;
    }
  }
  out.components = static_cast<int>(out.monodromy.partition.size());
  return out;
}

ComponentCount web_components(const SymWeb& w, Rng& rng, const TrackOptions& opt) {
  const MPoly t = MPoly::var("x");
  const MPoly m = MPoly::var("y");
  for (int attempt = 0; attempt < 50; ++attempt) {
    const Rational a1 = rng.rational(), a2 = rng.rational();
    const Rational b1 = rng.rational(), b2 = rng.rational();
    const Rational gamma = rng.rational();
    if (a1 == 0 && a2 == 0) continue;
    const MPoly h = substitute(w.form(), {{"x", a1 * t + MPoly(b1)},
                                          {"y", a2 * t + MPoly(b2)},
                                          {"dx", MPoly(1) + gamma * m},
                                          {"dy", m}})
                        .trimmed();
    if (h.is_constant()) continue;
    // A factor free of the slope means the line meets the singular set.
    const MPoly content = gcd_all(coefficients(h.with_vars({"x", "y"}), "y"));
    if (!content.is_constant()) continue;
    if (h.degree("y") != w.k()) continue;
    return curve_components(h, rng, opt);
  }
  throw WebError("web_components: no admissible random line in 50 attempts");
}

}  // namespace polarweb
