#include "polarweb/web.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace polarweb {

namespace {

void require_vars(const MPoly& f, const std::vector<std::string>& allowed, const char* what) {
  for (const auto& v : f.used_vars()) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      throw WebError(std::string(what) + ": unexpected variable '" + v + "'");
    }
  }
}

}  // namespace

SymWeb SymWeb::from_form(const MPoly& form, MPoly* removed) {
  require_vars(form, {"x", "y", "dx", "dy"}, "web form");
  if (form.is_zero()) throw WebError("web form is identically zero");
  const int dx = form.var_index("dx");
  const int dy = form.var_index("dy");
  int k = -1;
  for (const auto& [m, c] : form.terms()) {
    const int e = (dx >= 0 ? static_cast<int>(m[dx]) : 0) + (dy >= 0 ? static_cast<int>(m[dy]) : 0);
    if (k < 0) k = e;
    if (e != k) throw WebError("web form is not homogeneous in dx, dy");
  }
  if (k < 1) throw WebError("web form has degree 0 in dx, dy");

  SymWeb w;
  w.k_ = k;
  const MPoly full = form.with_vars(merge_vars(form.vars(), {"dx", "dy"}));
  const auto by_dy = polarweb::coefficients(full, "dy");
  w.coeffs_.resize(k + 1);
  for (int i = 0; i <= k; ++i) {
    if (i < static_cast<int>(by_dy.size())) w.coeffs_[i] = evaluate(by_dy[i], {{"dx", 1}}).trimmed();
  }
  const MPoly g = gcd_all(w.coeffs_);
  if (!g.is_constant()) {
    if (removed == nullptr) throw WebError("web coefficients share the factor " + g.str());
    *removed = g;
    for (MPoly& a : w.coeffs_) a = exact_divide(a, g).trimmed();
    w.form_ = exact_divide(form, g);
  } else {
    if (removed != nullptr) *removed = MPoly(1);
    w.form_ = form;
  }
  w.form_ = w.form_.trimmed();
  w.discriminant_ = discriminant_binary(w.form_);
  return w;
}

Foliation Foliation::from_field(const MPoly& A, const MPoly& B) {
  require_vars(A, {"x", "y"}, "vector field");
  require_vars(B, {"x", "y"}, "vector field");
  if (A.is_zero() && B.is_zero()) throw WebError("vector field is identically zero");
  Foliation f;
  f.removed = gcd(A, B);
  f.A = exact_divide(A, f.removed).trimmed();
  f.B = exact_divide(B, f.removed).trimmed();
  f.web = SymWeb::from_form(f.A * MPoly::var("dy") - f.B * MPoly::var("dx"));
  return f;
}

Foliation Foliation::from_web(const SymWeb& w) {
  if (w.k() != 1) throw WebError("a foliation is a 1-web");
  return from_field(w.coefficients()[1], -w.coefficients()[0]);
}

PlaneCurve PlaneCurve::from_poly(const MPoly& f) {
  require_vars(f, {"x", "y"}, "curve");
  if (f.is_zero()) throw WebError("curve polynomial is identically zero");
  PlaneCurve c;
  c.original = f.trimmed();
  c.defining = f.is_constant() ? MPoly(1) : canonical(squarefree_part(f)).trimmed();
  return c;
}

Superposition superpose(const SymWeb& w1, const SymWeb& w2) {
  Superposition s;
  s.web = SymWeb::from_form(w1.form() * w2.form());
  s.square_free = s.web.square_free();
  return s;
}

int web_degree(const SymWeb& w, Rng& rng) {
  const MPoly t = MPoly::var("t");
  for (int round = 0; round < 50; ++round) {
    std::vector<int> degrees;
    for (int attempt = 0; attempt < 6 && degrees.size() < 3; ++attempt) {
      const Rational a1 = rng.rational(), a2 = rng.rational();
      const Rational b1 = rng.rational(), b2 = rng.rational();
      if (a1 == 0 && a2 == 0) continue;
      const MPoly r = substitute(w.form(), {{"x", a1 * t + MPoly(b1)},
                                            {"y", a2 * t + MPoly(b2)},
                                            {"dx", MPoly(a1)},
                                            {"dy", MPoly(a2)}});
      if (r.is_zero()) continue;
      degrees.push_back(std::max(r.degree("t"), 0));
    }
    if (degrees.size() < 3) continue;
    if (std::all_of(degrees.begin(), degrees.end(), [&](int d) { return d == degrees[0]; })) {
      return degrees[0];
    }
  }
  throw WebError("web_degree: restrictions to random lines never agreed in 50 rounds");
}

SingularSet singular_set(const SymWeb& w) {
  SingularSet s;
  for (const MPoly& a : w.coefficients()) {
    if (!a.is_zero()) s.generators.push_back(a);
  }
  s.points = common_zeros(s.generators);
  return s;
}

MPoly discriminant_poly(const SymWeb& w) { return w.discriminant(); }

PlaneCurve discriminant_curve(const SymWeb& w) {
  const MPoly d = discriminant_poly(w);
  if (d.is_zero()) throw WebError("discriminant vanishes identically: the web is not square-free");
  return PlaneCurve::from_poly(d);
}

Direction Direction::rational(const Rational& u, const Rational& v) {
  Direction d;
  d.exact = true;
  if (u != 0) {
    d.u = 1;
    d.v = v / u;
  } else {
    d.u = 0;
    d.v = 1;
  }
  d.zu = d.u.get_d();
  d.zv = d.v.get_d();
  return d;
}

Direction Direction::numeric(Complex u, Complex v) {
  Direction d;
  d.exact = false;
  if (std::abs(u) > 1e-12 * std::abs(v)) {
    d.zu = 1;
    d.zv = v / u;
  } else {
    d.zu = 0;
    d.zv = 1;
  }
  return d;
}

std::string Direction::str() const {
  if (exact) return "(" + to_string(u) + ":" + to_string(v) + ")";
  char buf[96];
  if (zv.imag() == 0) {
    std::snprintf(buf, sizeof buf, "(%g:%.12g)", zu.real(), zv.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%g:%.12g%+.12gi)", zu.real(), zv.real(), zv.imag());
  }
  return buf;
}

bool same_direction(const Direction& d1, const Direction& d2, double tol) {
  if (d1.exact && d2.exact) return d1.u * d2.v == d2.u * d1.v;
  const double scale = std::hypot(std::abs(d1.zu), std::abs(d1.zv)) *
                       std::hypot(std::abs(d2.zu), std::abs(d2.zv));
  return std::abs(d1.zu * d2.zv - d2.zu * d1.zv) <= tol * scale;
}

std::vector<std::pair<Direction, int>> binary_form_roots(const std::vector<Rational>& coeffs) {
  const int k = static_cast<int>(coeffs.size()) - 1;
  int top = -1;
  for (int i = 0; i <= k; ++i) {
    if (coeffs[i] != 0) top = i;
  }
  if (top < 0) throw WebError("binary form vanishes identically");
  std::vector<std::pair<Direction, int>> out;
  if (top < k) out.emplace_back(Direction::rational(0, 1), k - top);
  if (top == 0) return out;
  MPoly f;
  for (int i = 0; i <= top; ++i) f += MPoly::term("t", i, coeffs[i]);
  for (const auto& [factor, mult] : squarefree_decomposition(f, "t")) {
    if (factor.degree("t") <= 0) continue;
    const UnivariateRoots r = univariate_distinct_roots(factor, "t");
    for (const Rational& m : r.rational) out.emplace_back(Direction::rational(1, m), mult);
    for (const Complex& m : r.numeric) out.emplace_back(Direction::numeric(1, m), mult);
  }
  return out;
}

std::vector<std::pair<Direction, int>> binary_form_roots(const std::vector<Complex>& coeffs) {
  const int k = static_cast<int>(coeffs.size()) - 1;
  double norm = 0;
  for (const Complex& c : coeffs) norm = std::max(norm, std::abs(c));
  if (norm == 0) throw WebError("binary form vanishes identically");
  int top = -1;
  for (int i = 0; i <= k; ++i) {
    if (std::abs(coeffs[i]) > 1e-12 * norm) top = i;
  }
  std::vector<std::pair<Direction, int>> out;
  if (top < k) out.emplace_back(Direction::numeric(0, 1), k - top);
  if (top == 0) return out;
  const CPoly p(coeffs.begin(), coeffs.begin() + top + 1);
  for (const auto& [m, mult] : cluster_roots(univariate_roots(p), 1e-6)) {
    out.emplace_back(Direction::numeric(1, m), mult);
  }
  return out;
}

std::vector<Direction> tangent_directions(const SymWeb& w, const AffinePoint& p) {
  std::vector<std::pair<Direction, int>> roots;
  if (p.exact) {
    std::vector<Rational> c;
    for (const MPoly& a : w.coefficients()) c.push_back(evaluate_exact(a, {{"x", p.a}, {"y", p.b}}));
    if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; })) {
      throw WebError("tangent directions undefined: " + p.str() + " is a singular point");
    }
    roots = binary_form_roots(c);
  } else {
    std::vector<Complex> c;
    bool all_small = true;
    for (const MPoly& a : w.coefficients()) {
      c.push_back(evaluate_complex(a, {{"x", p.za}, {"y", p.zb}}));
      if (!vanishes_at(a, p)) all_small = false;
    }
    if (all_small) throw WebError("tangent directions undefined: " + p.str() + " is a singular point");
    roots = binary_form_roots(c);
  }
  std::vector<Direction> out;
  for (const auto& [d, mult] : roots) {
    if (mult > 1) throw WebError("repeated direction " + d.str() + ": " + p.str() + " lies on the discriminant");
    out.push_back(d);
  }
  return out;
}

Smoothness is_smooth_point(const SymWeb& w, const AffinePoint& p) {
  bool singular = true;
  for (const MPoly& a : w.coefficients()) {
    if (!vanishes_at(a, p)) singular = false;
  }
  if (singular) return {false, "singular point of the web"};
  if (vanishes_at(discriminant_poly(w), p)) return {false, "lies on the discriminant"};
  return {true, "smooth"};
}

std::vector<AffinePoint> curve_singular_points(const MPoly& f) {
  if (f.is_constant()) return {};
  const MPoly g = squarefree_part(f).with_vars({"x", "y"});
  return common_zeros({g, derivative(g, "x"), derivative(g, "y")});
}

}  // namespace polarweb
