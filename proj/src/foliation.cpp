#include "polarweb/foliation.hpp"

#include <algorithm>
#include <cmath>

namespace polarweb {

namespace {

const MPoly kX = MPoly::var("x");
const MPoly kY = MPoly::var("y");
constexpr double kZeroTol = 1e-7;

double factorial_ratio(int j, int i) {
  double r = 1;
  for (int s = 0; s < i; ++s) r *= j - s;
  return r;
}

// Degree-m coefficients c_j of u^(m-j) v^j.
std::vector<Rational> form_exact(const Germ& g, int m) {
  std::vector<Rational> c(m + 1);
  for (int j = 0; j <= m; ++j) {
    auto it = g.terms.find({m - j, j});
    if (it != g.terms.end()) c[j] = it->second;
  }
  return c;
}

std::vector<NumCoeff> form_numeric(const Germ& g, int m) {
  std::vector<NumCoeff> c(m + 1);
  for (int j = 0; j <= m; ++j) {
    auto it = g.num_terms.find({m - j, j});
    if (it != g.num_terms.end()) c[j] = it->second;
  }
  return c;
}

Rational eval_form(const std::vector<Rational>& c, const Rational& u, const Rational& v) {
  const int m = static_cast<int>(c.size()) - 1;
  Rational s = 0;
  for (int j = 0; j <= m; ++j) {
    Rational t = c[j];
    for (int i = 0; i < m - j; ++i) t *= u;
    for (int i = 0; i < j; ++i) t *= v;
    s += t;
  }
  return s;
}

NumCoeff eval_form(const std::vector<NumCoeff>& c, Complex u, Complex v) {
  const int m = static_cast<int>(c.size()) - 1;
  NumCoeff s;
  for (int j = 0; j <= m; ++j) {
    const Complex w = std::pow(u, m - j) * std::pow(v, j);
    s.value += c[j].value * w;
    s.scale += c[j].scale * std::abs(w);
  }
  return s;
}

// Multiplicity of (u : v) as a root of the binary form.
int root_multiplicity(const std::vector<Rational>& c, const Rational& u, const Rational& v) {
  const int m = static_cast<int>(c.size()) - 1;
  // Dehomogenize by the nonzero coordinate: h(t) = sum c_j t^j with t = v/u,
  // or sum c_j s^(m-j) with s = u/v.
  std::vector<Rational> h(m + 1);
  Rational t;
  if (u != 0) {
    h = c;
    t = v / u;
  } else {
    for (int j = 0; j <= m; ++j) h[m - j] = c[j];
    t = 0;
  }
  int mult = 0;
  for (int i = 0; i <= m; ++i) {
    Rational val = 0, tp = 1;
    for (int j = i; j <= m; ++j) {
      val += h[j] * static_cast<long>(factorial_ratio(j, i)) * tp;
      tp *= t;
    }
    if (val != 0) break;
    ++mult;
  }
  return mult;
}

int root_multiplicity(const std::vector<NumCoeff>& c, Complex u, Complex v) {
  const int m = static_cast<int>(c.size()) - 1;
  std::vector<NumCoeff> h(m + 1);
  Complex t;
  if (std::abs(u) >= std::abs(v)) {
    h = c;
    t = v / u;
  } else {
    for (int j = 0; j <= m; ++j) h[m - j] = c[j];
    t = u / v;
  }
  int mult = 0;
  for (int i = 0; i <= m; ++i) {
    NumCoeff val;
    Complex tp = 1;
    for (int j = i; j <= m; ++j) {
      const double f = factorial_ratio(j, i);
      val.value += h[j].value * f * tp;
      val.scale += h[j].scale * f * std::abs(tp);
      tp *= t;
    }
    if (val.scale == 0 || std::abs(val.value) <= kZeroTol * val.scale) {
      ++mult;
    } else {
      break;
    }
  }
  return mult;
}

MPoly homogenize_to(const MPoly& f, int n) {
  const MPoly g = f.trimmed().with_vars({"x", "y"});
  const int ix = g.var_index("x"), iy = g.var_index("y");
  MPoly out;
  for (const auto& [mono, c] : g.terms()) {
    out += MPoly::term("x", mono[ix]) * MPoly::term("y", mono[iy]) *
           MPoly::term("z", n - static_cast<int>(mono[ix] + mono[iy]), c);
  }
  return out;
}

bool has_zeros(const MPoly& f) { return !f.is_constant() || f.is_zero(); }

std::vector<AffinePoint> zeros_of(const std::vector<MPoly>& polys) {
  for (const MPoly& p : polys) {
    if (!has_zeros(p)) return {};
  }
  std::vector<MPoly> nonzero;
  for (const MPoly& p : polys) {
    if (!p.is_zero()) nonzero.push_back(p.with_vars({"x", "y"}));
  }
  return common_zeros(nonzero);
}

InflexionTest hessian_test_exact(const MPoly& C, const Rational& a, const Rational& b) {
  const std::map<std::string, Rational> at{{"x", a}, {"y", b}};
  const MPoly cx = derivative(C, "x"), cy = derivative(C, "y");
  const Rational gx = evaluate_exact(cx, at), gy = evaluate_exact(cy, at);
  if (gx == 0 && gy == 0) throw WebError("is_inflexion_point: singular point of the curve");
  const Rational hxx = evaluate_exact(derivative(cx, "x"), at);
  const Rational hxy = evaluate_exact(derivative(cx, "y"), at);
  const Rational hyy = evaluate_exact(derivative(cy, "y"), at);
  const Rational t1 = -gy, t2 = gx;
  InflexionTest out;
  out.inflexion = t1 * t1 * hxx + 2 * t1 * t2 * hxy + t2 * t2 * hyy == 0;
  return out;
}

InflexionTest hessian_test_numeric(const MPoly& C, const std::map<std::string, Complex>& at) {
  const MPoly cx = derivative(C, "x"), cy = derivative(C, "y");
  const Complex gx = evaluate_complex(cx, at), gy = evaluate_complex(cy, at);
  if (relative_residual(cx, at) < 1e-9 && relative_residual(cy, at) < 1e-9) {
    throw WebError("is_inflexion_point: singular point of the curve");
  }
  const Complex hxx = evaluate_complex(derivative(cx, "x"), at);
  const Complex hxy = evaluate_complex(derivative(cx, "y"), at);
  const Complex hyy = evaluate_complex(derivative(cy, "y"), at);
  const Complex t1 = -gy, t2 = gx;
  const Complex val = t1 * t1 * hxx + 2.0 * t1 * t2 * hxy + t2 * t2 * hyy;
  const double scale = std::norm(t1) * std::abs(hxx) + 2 * std::abs(t1 * t2) * std::abs(hxy) +
                       std::norm(t2) * std::abs(hyy);
  InflexionTest out;
  out.exact = false;
  out.residual = scale == 0 ? 0 : std::abs(val) / scale;
  out.inflexion = out.residual <= kZeroTol;
  return out;
}

}  // namespace

InflexionDivisor inflexion_divisor(const Foliation& f) {
  const MPoly A = f.A.trimmed().with_vars({"x", "y"});
  const MPoly B = f.B.trimmed().with_vars({"x", "y"});
  InflexionDivisor out;
  out.raw = (B * B * derivative(A, "y") + A * B * derivative(A, "x") - A * A * derivative(B, "x") -
             A * B * derivative(B, "y"))
                .trimmed();
  out.all_leaves_lines = out.raw.is_zero();
  if (!out.all_leaves_lines) out.curve = PlaneCurve::from_poly(out.raw);
  return out;
}

SingularityClass classify_singularity(const Foliation& f, const AffinePoint& q) {
  if (!vanishes_at(f.A, q) || !vanishes_at(f.B, q)) {
    throw WebError("classify_singularity: " + q.str() + " is not a singular point");
  }
  SingularityClass out;
  out.point = q;
  out.exact = q.exact;
  const Germ ga = Germ::at(f.A, q), gb = Germ::at(f.B, q);
  const int ma = ga.multiplicity(), mb = gb.multiplicity();
  int k = ma < 0 ? mb : (mb < 0 ? ma : std::min(ma, mb));
  if (k < 1) throw InternalError("classify_singularity: jets of order 0 at a singular point");
  out.jet_order = k;
  if (q.exact) {
    const auto a = form_exact(ga, k), b = form_exact(gb, k);
    // Coefficient of x^(k+1-j) y^j in y A_k - x B_k.
    bool zero = true;
    for (int j = 0; j <= k + 1; ++j) {
      const Rational ya = j >= 1 ? a[j - 1] : Rational(0);
      const Rational xb = j <= k ? b[j] : Rational(0);
      zero = zero && ya == xb;
    }
    out.quasi_radial = zero;
    if (zero) {
      MPoly P;
      for (int j = 0; j < k; ++j) P += MPoly::term("x", k - 1 - j) * MPoly::term("y", j, a[j]);
      out.cofactor = P.trimmed();
    }
    return out;
  }
  const auto a = form_numeric(ga, k), b = form_numeric(gb, k);
  double top = 0, worst = 0;
  for (int j = 0; j <= k; ++j) top = std::max({top, std::abs(a[j].value), std::abs(b[j].value)});
  for (int j = 0; j <= k + 1; ++j) {
    const Complex ya = j >= 1 ? a[j - 1].value : Complex(0);
    const Complex xb = j <= k ? b[j].value : Complex(0);
    worst = std::max(worst, std::abs(ya - xb));
  }
  out.criterion_residual = top == 0 ? 0 : worst / top;
  out.quasi_radial = out.criterion_residual <= kZeroTol;
  return out;
}

ConeLine tangent_cone_line(const Foliation& f, const SingularityClass& sc, const AffinePoint& p) {
  if (!p.exact) throw WebError("tangent_cone_line: the centre must be rational");
  ConeLine out;
  out.q = sc.point;
  out.p = p;
  out.quasi_radial = sc.quasi_radial;
  out.expected = sc.quasi_radial ? 1 : 0;
  if (same_point(p, sc.point)) {
    out.degenerate = true;
    out.reason = "p = q";
    return out;
  }
  const MPoly polar = (f.A * (kY - MPoly(p.b)) - f.B * (kX - MPoly(p.a))).trimmed();
  const Germ g = Germ::at(polar, sc.point);
  const Germ ga = Germ::at(f.A, sc.point), gb = Germ::at(f.B, sc.point);
  const int k = sc.jet_order;
  out.cone_order = g.multiplicity();
  if (out.cone_order < 1) throw InternalError("tangent_cone_line: polar misses the singular point");
  if (sc.point.exact) {
    const Rational u = p.a - sc.point.a, v = p.b - sc.point.b;
    const auto a = form_exact(ga, k), b = form_exact(gb, k);
    if (sc.quasi_radial) {
      // P(u, v) with A_k = x P.
      std::vector<Rational> pc(a.begin(), a.end() - 1);
      if (eval_form(pc, u, v) == 0) {
        out.degenerate = true;
        out.reason = "the line pq divides the radial cofactor";
      }
    } else if (v * eval_form(a, u, v) - u * eval_form(b, u, v) == 0) {
      out.degenerate = true;
      out.reason = "(y A_k - x B_k)(p - q) = 0";
    }
    out.line_multiplicity = root_multiplicity(form_exact(g, out.cone_order), u, v);
    return out;
  }
  const Complex u = p.za - sc.point.za, v = p.zb - sc.point.zb;
  const auto a = form_numeric(ga, k), b = form_numeric(gb, k);
  if (sc.quasi_radial) {
    std::vector<NumCoeff> pc(a.begin(), a.end() - 1);
    const NumCoeff val = eval_form(pc, u, v);
    if (std::abs(val.value) <= kZeroTol * val.scale) {
      out.degenerate = true;
      out.reason = "the line pq divides the radial cofactor";
    }
  } else {
    const NumCoeff ea = eval_form(a, u, v), eb = eval_form(b, u, v);
    const Complex val = v * ea.value - u * eb.value;
    const double scale = std::abs(v) * ea.scale + std::abs(u) * eb.scale;
    if (std::abs(val) <= kZeroTol * scale) {
      out.degenerate = true;
      out.reason = "(y A_k - x B_k)(p - q) = 0";
    }
  }
  out.line_multiplicity = root_multiplicity(form_numeric(g, out.cone_order), u, v);
  return out;
}

InflexionTest is_inflexion_point(const MPoly& C, const AffinePoint& p) {
  const MPoly c = C.trimmed().with_vars({"x", "y"});
  if (!vanishes_at(c, p)) throw WebError("is_inflexion_point: " + p.str() + " is not on the curve");
  if (p.exact) return hessian_test_exact(c, p.a, p.b);
  return hessian_test_numeric(c, {{"x", p.za}, {"y", p.zb}});
}

InflexionTest polar_inflexion_at_center(const Foliation& f, const AffinePoint& p) {
  if (p.exact) return is_inflexion_point(f.A * (kY - MPoly(p.b)) - f.B * (kX - MPoly(p.a)), p);
  const MPoly param = f.A * (kY - MPoly::var("b")) - f.B * (kX - MPoly::var("a"));
  return hessian_test_numeric(param, {{"x", p.za}, {"y", p.zb}, {"a", p.za}, {"b", p.zb}});
}

std::vector<CurveSample> points_on_curve(const MPoly& e0, Rng& rng, int wanted, int tries) {
  const MPoly e = e0.trimmed().with_vars({"x", "y"});
  if (e.is_constant()) return {};
  std::vector<CurveSample> out;
  const MPoly t = MPoly::var("t");
  auto add = [&out](const AffinePoint& p, const std::string& how) {
    for (const auto& s : out) {
      if (same_point(s.point, p)) return;
    }
    out.push_back({p, how});
  };
  auto rational_on_line = [&](const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2,
                              const std::string& how) {
    const MPoly g = substitute(e, {{"x", a1 * t + MPoly(b1)}, {"y", a2 * t + MPoly(b2)}}).trimmed();
    if (g.is_zero() || g.is_constant()) return;
    for (const Rational& r : univariate_distinct_roots(g, "t").rational) {
      add(AffinePoint::rational(a1 * r + b1, a2 * r + b2), how);
    }
  };
  for (int round = 0; round < tries && static_cast<int>(out.size()) < wanted; ++round) {
    switch (round % 4) {
      case 0:
        rational_on_line(rng.rational(), rng.rational(), rng.rational(), rng.rational(), "random rational line");
        break;
      case 1:
        rational_on_line(0, rng.rational(), 1, 0, "vertical line");
        break;
      case 2:
        rational_on_line(1, 0, 0, rng.rational(), "horizontal line");
        break;
      default: {
        std::vector<AffinePoint> known;
        for (const auto& s : out) {
          if (s.point.exact) known.push_back(s.point);
        }
        if (known.empty()) break;
        const AffinePoint& p0 = known[rng.uniform_int(0, static_cast<std::int64_t>(known.size()) - 1)];
        rational_on_line(1, p0.a, rng.rational(), p0.b, "line through a known point");
        break;
      }
    }
  }
  for (int round = 0; round < tries && static_cast<int>(out.size()) < wanted; ++round) {
    const Rational a1 = rng.rational(), b1 = rng.rational(), a2 = rng.rational(), b2 = rng.rational();
    const MPoly g = substitute(e, {{"x", a1 * t + MPoly(b1)}, {"y", a2 * t + MPoly(b2)}}).trimmed();
    if (g.is_constant()) continue;
    for (const Complex& r : univariate_distinct_roots(g, "t").numeric) {
      const AffinePoint p = AffinePoint::numeric(a1.get_d() * r + b1.get_d(), a2.get_d() * r + b2.get_d());
      if (residual_at(e, p) < 1e-9) add(p, "numeric point on a random line");
      if (static_cast<int>(out.size()) >= wanted) break;
    }
  }
  return out;
}

Foliation foliation_chart(const Foliation& f, Chart chart) {
  if (chart == Chart::affine) return f;
  const int n = std::max(f.A.total_degree(), f.B.total_degree());
  const MPoly Ah = homogenize_to(f.A, n), Bh = homogenize_to(f.B, n);
  const MPoly z = MPoly::var("z");
  if (chart == Chart::x_one) return Foliation::from_field(chart_poly(Bh - kY * Ah, chart), chart_poly(-(z * Ah), chart));
  return Foliation::from_field(chart_poly(Ah - kX * Bh, chart), chart_poly(-(z * Bh), chart));
}

std::vector<FoliationSingularity> foliation_singularities(const Foliation& f, bool include_infinity) {
  std::vector<FoliationSingularity> out;
  for (const AffinePoint& q : zeros_of({f.A, f.B})) {
    FoliationSingularity s;
    s.local = q;
    s.point.exact = q.exact;
    s.point.X = q.a;
    s.point.Y = q.b;
    s.point.Z = 1;
    s.point.zX = q.za;
    s.point.zY = q.zb;
    s.point.zZ = 1;
    s.cls = classify_singularity(f, q);
    out.push_back(s);
  }
  if (!include_infinity) return out;
  const Foliation fx = foliation_chart(f, Chart::x_one);
  for (const AffinePoint& q : zeros_of({fx.A, fx.B, kY})) {
    FoliationSingularity s;
    s.chart = Chart::x_one;
    s.local = q;
    s.point.exact = q.exact;
    s.point.X = 1;
    s.point.Y = q.a;
    s.point.Z = 0;
    s.point.zX = 1;
    s.point.zY = q.za;
    s.point.zZ = 0;
    s.cls = classify_singularity(fx, q);
    out.push_back(s);
  }
  const Foliation fy = foliation_chart(f, Chart::y_one);
  const AffinePoint origin = AffinePoint::rational(0, 0);
  if (vanishes_at(fy.A, origin) && vanishes_at(fy.B, origin)) {
    FoliationSingularity s;
    s.chart = Chart::y_one;
    s.local = origin;
    s.point.X = 0;
    s.point.Y = 1;
    s.point.Z = 0;
    s.point.zX = 0;
    s.point.zY = 1;
    s.point.zZ = 0;
    s.cls = classify_singularity(fy, origin);
    out.push_back(s);
  }
  return out;
}

CurveClass class_of_curve(const MPoly& c0, Rng& rng, int samples) {
  const MPoly c = c0.trimmed().with_vars({"x", "y"});
  if (c.is_constant()) throw LocalError("class_of_curve: constant polynomial");
  if (squarefree_part(c).total_degree() != c.total_degree()) throw LocalError("class_of_curve: curve is not reduced");
  CurveClass out;
  const int n = c.total_degree();
  out.degree = n;
  const MPoly F = homogenize(c);
  const MPoly Fx = derivative(F, "x"), Fy = derivative(F, "y"), Fz = derivative(F, "z");
  const std::vector<CurvePoint> sing = projective_singular_points(c);
  for (int attempt = 0; attempt < 50 && static_cast<int>(out.values.size()) < std::max(samples, 2); ++attempt) {
    const Rational z1 = rng.rational(), z2 = rng.rational();
    if (evaluate_exact(c, {{"x", z1}, {"y", z2}}) == 0) continue;
    const MPoly Q = z1 * Fx + z2 * Fy + Fz;
    int total = 0;
    bool ok = true;
    for (const CurvePoint& cp : sing) {
      try {
        total += intersection_multiplicity(chart_poly(F, cp.chart), chart_poly(Q, cp.chart), cp.local);
      } catch (const LocalError&) {
        ok = false;
        break;
      }
      out.exact = out.exact && cp.local.exact;
    }
    if (!ok) continue;
    out.aux_points.push_back(AffinePoint::rational(z1, z2));
    out.singular_contributions.push_back(total);
    out.values.push_back(n * (n - 1) - total);
  }
  if (out.values.empty()) throw LocalError("class_of_curve: no admissible auxiliary point in 50 attempts");
  out.value = out.values.front();
  out.consistent = std::all_of(out.values.begin(), out.values.end(), [&](int v) { return v == out.value; });
  return out;
}

}  // namespace polarweb
