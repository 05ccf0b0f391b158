#include "polarweb/solve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace polarweb {

AffinePoint AffinePoint::rational(const Rational& a, const Rational& b) {
  AffinePoint p;
  p.exact = true;
  p.a = a;
  p.b = b;
  p.za = Complex(a.get_d(), 0);
  p.zb = Complex(b.get_d(), 0);
  return p;
}

AffinePoint AffinePoint::numeric(Complex a, Complex b) {
  AffinePoint p;
  p.exact = false;
  p.za = a;
  p.zb = b;
  return p;
}

std::string format_complex(Complex z) {
  // Parts below the working precision are printed as zero.
  const double scale = std::abs(z);
  const double re = std::abs(z.real()) <= 1e-12 * scale ? 0.0 : z.real();
  const double im = std::abs(z.imag()) <= 1e-12 * scale ? 0.0 : z.imag();
  char buf[80];
  if (im == 0) {
    std::snprintf(buf, sizeof buf, "%.12g", re);
  } else if (re == 0) {
    std::snprintf(buf, sizeof buf, "%.12gi", im);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  }
  return buf;
}

std::string AffinePoint::str() const {
  if (exact) return "(" + to_string(a) + ", " + to_string(b) + ")";
  return "(" + format_complex(za) + ", " + format_complex(zb) + ")";
}

bool same_point(const AffinePoint& p, const AffinePoint& q, double tol) {
  if (p.exact && q.exact) return p.a == q.a && p.b == q.b;
  const auto close = [tol](Complex u, Complex v) {
    return std::abs(u - v) <= tol * (1 + std::max(std::abs(u), std::abs(v)));
  };
  return close(p.za, q.za) && close(p.zb, q.zb);
}

NumBivariate::NumBivariate(const MPoly& f, std::string_view x, std::string_view y) {
  const int ix = f.var_index(x);
  const int iy = f.var_index(y);
  for (std::size_t v = 0; v < f.vars().size(); ++v) {
    if (static_cast<int>(v) != ix && static_cast<int>(v) != iy && f.degree(f.vars()[v]) > 0) {
      throw PolyError("NumBivariate: unexpected variable " + f.vars()[v]);
    }
  }
  for (const auto& [m, c] : f.terms()) {
    Term t{ix >= 0 ? static_cast<int>(m[ix]) : 0, iy >= 0 ? static_cast<int>(m[iy]) : 0, c.get_d()};
    degree_x_ = std::max(degree_x_, t.i);
    degree_y_ = std::max(degree_y_, t.j);
    terms_.push_back(t);
  }
}

Complex NumBivariate::operator()(Complex x, Complex y) const {
  Complex total = 0;
  for (const Term& t : terms_) total += t.c * std::pow(x, t.i) * std::pow(y, t.j);
  return total;
}

CPoly NumBivariate::in_y(Complex x0) const {
  CPoly p(degree_y_ + 1, 0);
  for (const Term& t : terms_) p[t.j] += t.c * std::pow(x0, t.i);
  return p;
}

CPoly NumBivariate::in_x(Complex y0) const {
  CPoly p(degree_x_ + 1, 0);
  for (const Term& t : terms_) p[t.i] += t.c * std::pow(y0, t.j);
  return p;
}

double NumBivariate::relative_residual(Complex x, Complex y) const {
  Complex total = 0;
  double scale = 0;
  const double ax = std::abs(x), ay = std::abs(y);
  for (const Term& t : terms_) {
    total += t.c * std::pow(x, t.i) * std::pow(y, t.j);
    scale += std::abs(t.c) * std::pow(ax, t.i) * std::pow(ay, t.j);
  }
  return scale == 0 ? 0 : std::abs(total) / scale;
}

Complex evaluate_complex(const MPoly& f, const std::map<std::string, Complex>& values) {
  std::vector<Complex> val(f.vars().size());
  std::vector<bool> have(f.vars().size(), false);
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    auto it = values.find(f.vars()[i]);
    if (it != values.end()) {
      val[i] = it->second;
      have[i] = true;
    }
  }
  Complex total = 0;
  for (const auto& [m, c] : f.terms()) {
    Complex t = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!have[i]) throw PolyError("evaluate_complex: unassigned variable " + f.vars()[i]);
      t *= std::pow(val[i], static_cast<int>(m[i]));
    }
    total += t;
  }
  return total;
}

double relative_residual(const MPoly& f, const std::map<std::string, Complex>& values) {
  std::vector<Complex> val(f.vars().size());
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    auto it = values.find(f.vars()[i]);
    if (it != values.end()) val[i] = it->second;
  }
  Complex total = 0;
  double scale = 0;
  for (const auto& [m, c] : f.terms()) {
    Complex t = c.get_d();
    double s = std::abs(c.get_d());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      t *= std::pow(val[i], static_cast<int>(m[i]));
      s *= std::pow(std::abs(val[i]), static_cast<int>(m[i]));
    }
    total += t;
    scale += s;
  }
  return scale == 0 ? 0 : std::abs(total) / scale;
}

CPoly to_cpoly(const MPoly& f, std::string_view v) {
  const auto coeffs = coefficients(f, v);
  CPoly p;
  for (const MPoly& c : coeffs) {
    if (!c.is_constant()) throw PolyError("to_cpoly: polynomial is not univariate in " + std::string(v));
    p.emplace_back(c.constant_term().get_d(), 0);
  }
  return p;
}

std::vector<Rational> convergents(double value, long max_den) {
  std::vector<Rational> out;
  if (!std::isfinite(value) || std::abs(value) > 1e15) return out;
  // Convergents h_n / k_n of the continued fraction of value.
  Integer h_prev = 1, h = static_cast<long>(std::floor(value));
  Integer k_prev = 0, k = 1;
  double frac = value - std::floor(value);
  out.emplace_back(h, k);
  for (int step = 0; step < 64 && frac > 1e-15; ++step) {
    const double inv = 1 / frac;
    const double a = std::floor(inv);
    frac = inv - a;
    const Integer ai = static_cast<long>(a);
    const Integer h_next = ai * h + h_prev;
    const Integer k_next = ai * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    Rational q(h, k);
    q.canonicalize();
    out.push_back(q);
    if (a > 1e12) break;
  }
  return out;
}

UnivariateRoots univariate_distinct_roots(const MPoly& f, std::string_view v) {
  if (f.is_zero()) throw PolyError("univariate_distinct_roots: zero polynomial");
  const std::string var(v);
  UnivariateRoots out;
  MPoly rest = squarefree_part(f).with_vars({var});
  if (rest.degree(var) <= 0) return out;
  for (const Complex& z : univariate_roots(to_cpoly(rest, var), kExactLeading)) {
    if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z.real()))) continue;
    for (const Rational& q : convergents(z.real())) {
      if (std::abs(q.get_d() - z.real()) > 1e-6 * (1 + std::abs(z.real()))) continue;
      if (evaluate_exact(rest, {{var, q}}) == 0) {
        if (std::find(out.rational.begin(), out.rational.end(), q) == out.rational.end()) {
          out.rational.push_back(q);
          rest = exact_divide(rest, MPoly::var(var) - MPoly(q));
        }
        break;
      }
    }
  }
  std::sort(out.rational.begin(), out.rational.end());
  if (rest.degree(var) > 0) out.numeric = univariate_roots(to_cpoly(rest, var), kExactLeading);
  return out;
}

double residual_at(const MPoly& f, const AffinePoint& p) {
  if (p.exact) {
    return evaluate_exact(f, {{"x", p.a}, {"y", p.b}}) == 0 ? 0.0 : 1.0;
  }
  return NumBivariate(f).relative_residual(p.za, p.zb);
}

bool vanishes_at(const MPoly& f, const AffinePoint& p, double tol) {
  if (p.exact) return evaluate_exact(f, {{"x", p.a}, {"y", p.b}}) == 0;
  return NumBivariate(f).relative_residual(p.za, p.zb) < tol;
}

Rational shear_candidate(int i) {
  // 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, ...
  if (i == 0) return 0;
  const int group = (i - 1) / 4;
  const int slot = (i - 1) % 4;
  const Rational base = slot < 2 ? Rational(group + 1) : Rational(1, group + 2);
  return slot % 2 == 0 ? base : Rational(-base);
}

namespace {

bool point_less(const AffinePoint& p, const AffinePoint& q) {
  if (p.exact != q.exact) return p.exact;
  if (p.exact) return p.a != q.a ? p.a < q.a : p.b < q.b;
  const double pv[4] = {p.za.real(), p.za.imag(), p.zb.real(), p.zb.imag()};
  const double qv[4] = {q.za.real(), q.za.imag(), q.zb.real(), q.zb.imag()};
  return std::lexicographical_compare(pv, pv + 4, qv, qv + 4);
}

void add_unique(std::vector<AffinePoint>& pts, const AffinePoint& p) {
  for (const auto& q : pts) {
    if (same_point(p, q)) return;
  }
  pts.push_back(p);
}

std::vector<AffinePoint> solve(std::vector<MPoly> input, const SolveOptions& opt) {
  std::vector<MPoly> polys;
  for (const MPoly& f : input) {
    if (f.is_zero()) continue;
    for (const auto& v : f.used_vars()) {
      if (v != "x" && v != "y") throw PolyError("common_zeros: unexpected variable " + v);
    }
    if (f.is_constant()) return {};
    polys.push_back(canonical(f).with_vars({"x", "y"}));
  }
  if (polys.size() < 2) throw PositiveDimensional("common_zeros: zero set contains a curve");

  std::size_t main = 0;
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (polys[i].total_degree() < polys[main].total_degree()) main = i;
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i == main) continue;
    const MPoly d = gcd(polys[main], polys[i]);
    if (d.is_constant()) continue;
    std::vector<MPoly> with_d{d}, with_cofactor{exact_divide(polys[main], d)};
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (j == main) continue;
      if (j != i) with_d.push_back(polys[j]);
      with_cofactor.push_back(polys[j]);
    }
    std::vector<AffinePoint> out = solve(with_d, opt);
    for (const auto& p : solve(with_cofactor, opt)) add_unique(out, p);
    return out;
  }

  // Shear x -> x + c*y so that the main polynomial has constant leading
  // coefficient in y; then no common zero escapes the projection to x.
  const int n = polys[main].total_degree();
  const MPoly top = homogeneous_part(polys[main], {"x", "y"}, n);
  Rational c;
  for (int i = 0;; ++i) {
    c = shear_candidate(i);
    if (evaluate_exact(top, {{"x", c}, {"y", 1}}) != 0) break;
  }
  const std::map<std::string, MPoly> shear{{"x", MPoly::var("x") + c * MPoly::var("y")}};
  std::vector<MPoly> sheared;
  for (const MPoly& f : polys) sheared.push_back(substitute(f, shear));

  std::vector<MPoly> eliminants;
  for (std::size_t i = 0; i < sheared.size(); ++i) {
    if (i == main) continue;
    eliminants.push_back(sheared[i].degree("y") <= 0 ? sheared[i]
                                                      : resultant(sheared[main], sheared[i], "y"));
  }
  const MPoly h = gcd_all(eliminants).trimmed();
  if (h.is_constant()) return {};

  std::vector<AffinePoint> out;
  const UnivariateRoots xs = univariate_distinct_roots(h, "x");
  for (const Rational& x0 : xs.rational) {
    std::vector<MPoly> fibre;
    for (const MPoly& f : sheared) fibre.push_back(evaluate(f, {{"x", x0}}));
    const MPoly g = gcd_all(fibre).trimmed();
    if (g.is_constant()) continue;
    const UnivariateRoots ys = univariate_distinct_roots(g, "y");
    for (const Rational& y0 : ys.rational) add_unique(out, AffinePoint::rational(x0 + c * y0, y0));
    for (const Complex& y0 : ys.numeric) {
      add_unique(out, AffinePoint::numeric(x0.get_d() + c.get_d() * y0, y0));
    }
  }

  std::vector<NumBivariate> num;
  for (const MPoly& f : sheared) num.emplace_back(f);
  const auto max_residual = [&](Complex x, Complex y) {
    double r = 0;
    for (const auto& f : num) r = std::max(r, f.relative_residual(x, y));
    return r;
  };
  for (const Complex& x0 : xs.numeric) {
    const auto candidates = cluster_roots(univariate_roots(num[main].in_y(x0), kExactLeading), opt.cluster_tol);
    for (auto [y0, mult] : candidates) {
      double best = max_residual(x0, y0);
      // Polish on a member of the system that has y0 as a simple root.
      for (const auto& f : num) {
        if (f.degree_y() < 1) continue;
        const CPoly p = f.in_y(x0);
        const CPoly dp = derivative(p);
        Complex y = y0;
        for (int it = 0; it < 3; ++it) {
          const Complex d = horner(dp, y);
          if (std::abs(d) == 0) break;
          y -= horner(p, y) / d;
        }
        const double r = max_residual(x0, y);
        if (std::abs(y - y0) < opt.cluster_tol * (1 + std::abs(y0)) && r < best) {
          best = r;
          y0 = y;
        }
      }
      if (best < opt.accept_residual) {
        add_unique(out, AffinePoint::numeric(x0 + c.get_d() * y0, y0));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<AffinePoint> common_zeros(const std::vector<MPoly>& polys, const SolveOptions& opt) {
  std::vector<AffinePoint> out = solve(polys, opt);
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

}  // namespace polarweb
