#include "polarweb/polar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace polarweb {

namespace {

const MPoly kX = MPoly::var("x");
const MPoly kY = MPoly::var("y");

int rank(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Splits f into coefficients of the monomials in `outer`; the keys are the
/// exponent vectors in the order of `outer`.
std::map<std::vector<Exponent>, MPoly> group_by(const MPoly& f, const std::vector<std::string>& outer) {
  std::vector<int> idx;
  for (const auto& v : outer) idx.push_back(f.var_index(v));
  std::map<std::vector<Exponent>, MPoly> out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Exponent> key;
    Monomial rest = m;
    for (int i : idx) {
      key.push_back(i >= 0 ? m[i] : 0);
      if (i >= 0) rest[i] = 0;
    }
    auto [it, inserted] = out.try_emplace(key, MPoly::from_terms(f.vars(), {}));
    it->second.add_term(rest, c);
  }
  for (auto& [k, p] : out) p = p.trimmed();
  return out;
}

double proj_norm(const ProjPoint& p) { return std::abs(p.zX) + std::abs(p.zY) + std::abs(p.zZ); }

ProjPoint make_exact(Rational X, Rational Y, Rational Z) {
  ProjPoint p;
  p.exact = true;
  if (Z != 0) {
    X /= Z;
    Y /= Z;
    Z = 1;
  } else if (X != 0) {
    Y /= X;
    X = 1;
  } else {
    Y = 1;
  }
  p.X = X;
  p.Y = Y;
  p.Z = Z;
  p.zX = X.get_d();
  p.zY = Y.get_d();
  p.zZ = Z.get_d();
  return p;
}

ProjPoint make_numeric(Complex X, Complex Y, Complex Z) {
  ProjPoint p;
  p.exact = false;
  const double scale = std::abs(X) + std::abs(Y) + std::abs(Z);
  if (std::abs(Z) > 1e-12 * scale) {
    X /= Z;
    Y /= Z;
    Z = 1;
  } else if (std::abs(X) > 1e-12 * scale) {
    Y /= X;
    X = 1;
    Z = 0;
  } else {
    X = 0;
    Y = 1;
    Z = 0;
  }
  p.zX = X;
  p.zY = Y;
  p.zZ = Z;
  return p;
}

}  // namespace

MPoly radial_form(const Rational& a, const Rational& b) {
  return (kX - MPoly(a)) * MPoly::var("dy") - (kY - MPoly(b)) * MPoly::var("dx");
}

PolarCurve polar_curve(const SymWeb& w, const Rational& a, const Rational& b) {
  PolarCurve pc;
  pc.raw = substitute(w.form(), {{"dx", kX - MPoly(a)}, {"dy", kY - MPoly(b)}}).trimmed();
  if (pc.raw.is_zero()) {
    pc.whole_plane = true;
    pc.cofactor = exact_divide(w.form(), radial_form(a, b)).trimmed();
  } else {
    pc.curve = PlaneCurve::from_poly(pc.raw);
  }
  return pc;
}

PolarEquality polar_equality_criterion(const SymWeb& w1, const SymWeb& w2, const Rational& a,
                                       const Rational& b) {
  PolarEquality out;
  const MPoly diff = (w2.form() - w1.form()).trimmed();
  const PolarCurve p1 = polar_curve(w1, a, b);
  const PolarCurve p2 = polar_curve(w2, a, b);
  out.polars_equal = p1.raw == p2.raw;
  out.polar_curves_equal = p1.whole_plane == p2.whole_plane &&
                           (p1.whole_plane || p1.curve.defining == p2.curve.defining);
  if (diff.is_zero()) {
    out.identical = true;
    out.divisible = true;
    out.quotient = MPoly(0);
    return out;
  }
  out.quotient = try_divide(diff, radial_form(a, b));
  out.divisible = out.quotient.has_value();
  if (out.quotient) *out.quotient = out.quotient->trimmed();
  return out;
}

MPoly parametric_polar(const SymWeb& w) {
  return substitute(w.form(), {{"dx", kX - MPoly::var("a")}, {"dy", kY - MPoly::var("b")}}).trimmed();
}

PolarFamily polar_family(const SymWeb& w, Rng& rng) {
  PolarFamily f;
  f.parametric = parametric_polar(w);
  f.k = w.k();
  f.d = web_degree(w, rng);
  return f;
}

BasePoints base_points(const PolarFamily& family, const SymWeb& w) {
  BasePoints out;
  for (const auto& [key, c] : group_by(family.parametric, {"a", "b"})) out.coefficients.push_back(c);
  out.points = common_zeros(out.coefficients);
  const auto sing = singular_set(w).points;
  for (const auto& p : out.points) {
    const bool inside = std::any_of(sing.begin(), sing.end(), [&](const AffinePoint& q) { return same_point(p, q); });
    if (!inside) out.outside_singular_set.push_back(p);
  }
  return out;
}

int family_rank_at(const MPoly& parametric, const Rational& a, const Rational& b) {
  std::vector<std::vector<Rational>> rows(3);
  for (const auto& [key, c] : group_by(parametric, {"x", "y"})) {
    const std::map<std::string, Rational> at{{"a", a}, {"b", b}};
    rows[0].push_back(evaluate_exact(c, at));
    rows[1].push_back(c.declares("a") ? evaluate_exact(derivative(c, "a"), at) : Rational(0));
    rows[2].push_back(c.declares("b") ? evaluate_exact(derivative(c, "b"), at) : Rational(0));
  }
  return rank(rows) - 1;
}

int family_dimension(const SymWeb& w, Rng& rng, int samples) {
  const MPoly param = parametric_polar(w);
  int best = -1;
  for (int i = 0; i < std::max(samples, 5); ++i) {
    best = std::max(best, family_rank_at(param, rng.rational(), rng.rational()));
  }
  return best;
}

bool ProjPoint::at_infinity() const { return exact ? Z == 0 : zZ == Complex(0); }

std::string ProjPoint::str() const {
  if (exact) return "[" + to_string(X) + ":" + to_string(Y) + ":" + to_string(Z) + "]";
  return "[" + format_complex(zX) + ":" + format_complex(zY) + ":" + format_complex(zZ) + "]";
}

bool same_proj_point(const ProjPoint& p, const ProjPoint& q, double tol) {
  if (p.exact && q.exact) return p.X == q.X && p.Y == q.Y && p.Z == q.Z;
  const double scale = proj_norm(p) * proj_norm(q);
  const double c1 = std::abs(p.zX * q.zY - p.zY * q.zX);
  const double c2 = std::abs(p.zX * q.zZ - p.zZ * q.zX);
  const double c3 = std::abs(p.zY * q.zZ - p.zZ * q.zY);
  return std::max({c1, c2, c3}) <= tol * scale;
}

FamilyDegree family_degree(const SymWeb& w, const AffinePoint& p1, const AffinePoint& p2) {
  FamilyDegree out;
  for (const AffinePoint* p : {&p1, &p2}) {
    const Smoothness s = is_smooth_point(w, *p);
    if (!s.smooth) {
      out.degenerate = true;
      out.reason = p->str() + " " + s.reason;
      return out;
    }
  }
  if (!p1.exact || !p2.exact) throw WebError("family_degree: centres must be rational");
  if (same_point(p1, p2)) {
    out.degenerate = true;
    out.reason = "p1 = p2";
    return out;
  }
  const auto d1 = tangent_directions(w, p1);
  const auto d2 = tangent_directions(w, p2);
  const Direction joining = Direction::rational(p2.a - p1.a, p2.b - p1.b);
  for (const auto& d : d1) {
    if (same_direction(d, joining)) {
      out.degenerate = true;
      out.reason = "the line p1 p2 is tangent to the web at p1";
      return out;
    }
  }
  for (const auto& d : d2) {
    if (same_direction(d, joining)) {
      out.degenerate = true;
      out.reason = "the line p1 p2 is tangent to the web at p2";
      return out;
    }
  }

  // Line through (a, b) with direction (u : v): v X - u Y + (u b - v a) Z = 0.
  for (const auto& u : d1) {
    for (const auto& v : d2) {
      ProjPoint q;
      if (u.exact && v.exact) {
        const Rational l1[3] = {u.v, -u.u, u.u * p1.b - u.v * p1.a};
        const Rational l2[3] = {v.v, -v.u, v.u * p2.b - v.v * p2.a};
        q = make_exact(l1[1] * l2[2] - l1[2] * l2[1], l1[2] * l2[0] - l1[0] * l2[2],
                       l1[0] * l2[1] - l1[1] * l2[0]);
      } else {
        const Complex l1[3] = {u.zv, -u.zu, u.zu * p1.zb - u.zv * p1.za};
        const Complex l2[3] = {v.zv, -v.zu, v.zu * p2.zb - v.zv * p2.za};
        q = make_numeric(l1[1] * l2[2] - l1[2] * l2[1], l1[2] * l2[0] - l1[0] * l2[2],
                         l1[0] * l2[1] - l1[1] * l2[0]);
      }
      const bool seen = std::any_of(out.points.begin(), out.points.end(),
                                    [&](const ProjPoint& r) { return same_proj_point(q, r); });
      if (!seen) out.points.push_back(q);
    }
  }
  out.count = static_cast<int>(out.points.size());

  for (const auto& q : out.points) {
    for (const AffinePoint* p : {&p1, &p2}) {
      if (q.exact) {
        Rational du, dv;
        if (q.Z != 0) {
          du = p->a - q.X;
          dv = p->b - q.Y;
        } else {
          du = q.X;
          dv = q.Y;
        }
        if (evaluate_exact(w.form(), {{"x", p->a}, {"y", p->b}, {"dx", du}, {"dy", dv}}) != 0) {
          out.cross_check = false;
        }
      } else {
        Complex du, dv;
        if (q.zZ != Complex(0)) {
          du = p->za - q.zX;
          dv = p->zb - q.zY;
        } else {
          du = q.zX;
          dv = q.zY;
        }
        const double r = relative_residual(w.form(), {{"x", p->za}, {"y", p->zb}, {"dx", du}, {"dy", dv}});
        out.max_residual = std::max(out.max_residual, r);
        if (r >= 1e-9) out.cross_check = false;
      }
    }
  }
  return out;
}

TangentCone tangent_cone(const MPoly& f, const Rational& a, const Rational& b) {
  TangentCone out;
  out.point = AffinePoint::rational(a, b);
  const auto parts = jet_decompose(f, a, b);
  int m = 0;
  while (m < static_cast<int>(parts.size()) && parts[m].is_zero()) ++m;
  if (m == static_cast<int>(parts.size())) throw PolyError("tangent_cone: zero polynomial");
  out.cone = parts[m].trimmed();
  if (m == 0) return out;
  std::vector<Rational> c(m + 1);
  const MPoly cone = out.cone.with_vars(merge_vars(out.cone.vars(), {"x", "y"}));
  const int iy = cone.var_index("y");
  for (const auto& [mono, coef] : cone.terms()) c[mono[iy]] = coef;
  out.factors = binary_form_roots(c);

  // Compare the cone with the product of its linear factors v x - u y;
  // hom[j] is the coefficient of x^(m-j) y^j.
  std::vector<Complex> hom(1, 1);
  for (const auto& [d, e] : out.factors) {
    for (int i = 0; i < e; ++i) {
      std::vector<Complex> next(hom.size() + 1, 0);
      for (std::size_t j = 0; j < hom.size(); ++j) {
        next[j] += d.zv * hom[j];       // times v x
        next[j + 1] -= d.zu * hom[j];   // times -u y
      }
      hom = next;
    }
  }
  std::size_t lead = 0;
  double best = 0;
  for (std::size_t j = 0; j < hom.size(); ++j) {
    if (std::abs(hom[j]) > best) {
      best = std::abs(hom[j]);
      lead = j;
    }
  }
  const Complex scale = Complex(c[lead].get_d()) / hom[lead];
  double norm = 0, err = 0;
  for (std::size_t j = 0; j < hom.size(); ++j) {
    norm = std::max(norm, std::abs(c[j].get_d()));
    err = std::max(err, std::abs(c[j].get_d() - scale * hom[j]));
  }
  out.reconstruction_residual = norm == 0 ? 0 : err / norm;
  return out;
}

CenterBranches branches_at_center(const SymWeb& w, const Rational& a, const Rational& b) {
  const AffinePoint p = AffinePoint::rational(a, b);
  const Smoothness s = is_smooth_point(w, p);
  if (!s.smooth) throw WebError("branches_at_center: " + p.str() + " " + s.reason);
  CenterBranches out;
  const PolarCurve pc = polar_curve(w, a, b);
  if (pc.whole_plane) throw WebError("branches_at_center: polar is the whole plane");
  out.cone = tangent_cone(pc.raw, a, b);
  out.web_directions = tangent_directions(w, p);
  int total = 0;
  bool simple = true;
  for (const auto& [d, e] : out.cone.factors) {
    total += e;
    simple = simple && e == 1;
  }
  out.k_distinct = simple && total == w.k() && static_cast<int>(out.cone.factors.size()) == w.k();
  out.match = out.cone.factors.size() == out.web_directions.size();
  for (const auto& [d, e] : out.cone.factors) {
    const bool found = std::any_of(out.web_directions.begin(), out.web_directions.end(),
                                   [&](const Direction& e2) { return same_direction(d, e2); });
    out.match = out.match && found;
  }
  return out;
}

}  // namespace polarweb
