#include "polarweb/localsing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "polarweb/components.hpp"

namespace polarweb {

namespace {

using Key = Germ::Key;

MPoly in_xy(const MPoly& f) {
  for (const auto& v : f.used_vars()) {
    if (v != "x" && v != "y") throw LocalError("expected a polynomial in x, y; found " + v);
  }
  return f.trimmed().with_vars({"x", "y"});
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational binomial_q(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_zero(const NumCoeff& c, const GermOptions& opt) { return std::abs(c.value) <= opt.zero_tol * c.scale; }

void clean(Germ& g, const GermOptions& opt) {
  for (auto it = g.num_terms.begin(); it != g.num_terms.end();) {
    if (is_zero(it->second, opt) || it->second.scale == 0) {
      it = g.num_terms.erase(it);
    } else {
      ++it;
    }
  }
}

// Coefficients c_j of x^(m-j) y^j in the degree-m part.
std::vector<Rational> initial_exact(const Germ& g, int m) {
  std::vector<Rational> c(m + 1);
  for (int j = 0; j <= m; ++j) {
    auto it = g.terms.find({m - j, j});
    if (it != g.terms.end()) c[j] = it->second;
  }
  return c;
}

std::vector<NumCoeff> initial_numeric(const Germ& g, int m) {
  std::vector<NumCoeff> c(m + 1);
  for (int j = 0; j <= m; ++j) {
    auto it = g.num_terms.find({m - j, j});
    if (it != g.num_terms.end()) c[j] = it->second;
  }
  return c;
}

Complex eval_derivative(const std::vector<Complex>& h, int order, Complex t) {
  Complex v = 0;
  for (int j = static_cast<int>(h.size()) - 1; j >= order; --j) {
    double f = 1;
    for (int i = 0; i < order; ++i) f *= j - i;
    v = v * t + f * h[j];
  }
  return v;
}

// Roots (1 : t) and (0 : 1) of the initial form with multiplicities. Multiple
// numeric roots are refined as simple roots of the appropriate derivative.
std::vector<std::pair<Direction, int>> initial_roots(const Germ& g, int m, const GermOptions& opt) {
  if (g.exact) return binary_form_roots(initial_exact(g, m));
  const auto c = initial_numeric(g, m);
  int top = -1;
  for (int j = 0; j <= m; ++j) {
    if (!is_zero(c[j], opt) && c[j].scale > 0) top = j;
  }
  if (top < 0) throw LocalError("initial form vanishes numerically");
  std::vector<std::pair<Direction, int>> out;
  if (top < m) out.emplace_back(Direction::numeric(0, 1), m - top);
  if (top == 0) return out;
  std::vector<Complex> h(top + 1);
  for (int j = 0; j <= top; ++j) h[j] = is_zero(c[j], opt) ? Complex(0) : c[j].value;
  for (auto [t, e] : cluster_roots(univariate_roots(h, kExactLeading), opt.cluster_tol)) {
    if (e > 1) {
      for (int it = 0; it < 20; ++it) {
        const Complex d = eval_derivative(h, e, t);
        if (d == Complex(0)) break;
        const Complex step = eval_derivative(h, e - 1, t) / d;
        t -= step;
        if (std::abs(step) <= 1e-15 * (1 + std::abs(t))) break;
      }
    }
    out.emplace_back(Direction::numeric(1, t), e);
  }
  return out;
}

Germ chart_a(const Germ& g, int m, const Direction& d) {
  Germ out;
  if (g.exact && d.exact) {
    const Rational& t = d.v;
    for (const auto& [k, c] : g.terms) {
      const int i = k.first + k.second - m, j = k.second;
      Rational tp = 1;
      for (int s = j; s >= 0; --s) {
        const Rational v = c * binomial_q(j, s) * tp;
        if (v != 0) out.terms[{i, s}] += v;
        tp *= t;
      }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
      it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    }
    return out;
  }
  const Germ src = g.exact ? g.to_numeric() : g;
  out.exact = false;
  const Complex t = d.zv / d.zu;
  for (const auto& [k, c] : src.num_terms) {
    const int i = k.first + k.second - m, j = k.second;
    Complex tp = 1;
    for (int s = j; s >= 0; --s) {
      NumCoeff& dst = out.num_terms[{i, s}];
      const double b = binomial(j, s);
      dst.value += c.value * b * tp;
      dst.scale += c.scale * b * std::abs(tp);
      tp *= t;
    }
  }
  return out;
}

Germ chart_b(const Germ& g, int m) {
  Germ out;
  out.exact = g.exact;
  for (const auto& [k, c] : g.terms) out.terms[{k.first, k.first + k.second - m}] = c;
  for (const auto& [k, c] : g.num_terms) out.num_terms[{k.first, k.first + k.second - m}] = c;
  return out;
}

bool is_chart_b(const Direction& d) { return d.exact ? d.u == 0 : d.zu == Complex(0); }

bool is_zero_slope(const Direction& d, const GermOptions& opt) {
  if (d.exact) return d.v == 0;
  return std::abs(d.zv / d.zu) <= opt.cluster_tol;
}

CurvePoint affine_curve_point(const AffinePoint& p) {
  CurvePoint cp;
  cp.local = p;
  cp.point.exact = p.exact;
  cp.point.X = p.a;
  cp.point.Y = p.b;
  cp.point.Z = 1;
  cp.point.zX = p.za;
  cp.point.zY = p.zb;
  cp.point.zZ = 1;
  return cp;
}

int delta_of(const std::vector<int>& seq) {
  int s = 0;
  for (int m : seq) s += m * (m - 1) / 2;
  return s;
}

}  // namespace

Germ Germ::at(const MPoly& f0, const AffinePoint& p, const GermOptions& opt) {
  const MPoly f = in_xy(f0);
  Germ g;
  const int ix = f.var_index("x"), iy = f.var_index("y");
  if (p.exact) {
    const MPoly t = translate(f, p.a, p.b).with_vars({"x", "y"});
    const int tx = t.var_index("x"), ty = t.var_index("y");
    for (const auto& [mono, c] : t.terms()) g.terms[{static_cast<int>(mono[tx]), static_cast<int>(mono[ty])}] = c;
    return g;
  }
  g.exact = false;
  for (const auto& [mono, c] : f.terms()) {
    const int i = static_cast<int>(mono[ix]), j = static_cast<int>(mono[iy]);
    const double cv = c.get_d();
    Complex ap = 1;
    for (int r = i; r >= 0; --r) {
      Complex bp = 1;
      for (int s = j; s >= 0; --s) {
        const double b = binomial(i, r) * binomial(j, s);
        NumCoeff& dst = g.num_terms[{r, s}];
        dst.value += cv * b * ap * bp;
        dst.scale += std::abs(cv) * b * std::abs(ap) * std::abs(bp);
        bp *= p.zb;
      }
      ap *= p.za;
    }
  }
  clean(g, opt);
  return g;
}

Germ Germ::to_numeric() const {
  if (!exact) return *this;
  Germ g;
  g.exact = false;
  for (const auto& [k, c] : terms) {
    const double v = c.get_d();
    g.num_terms[k] = {v, std::abs(v)};
  }
  return g;
}

int Germ::multiplicity() const {
  int m = -1;
  auto visit = [&m](const Key& k) {
    const int d = k.first + k.second;
    if (m < 0 || d < m) m = d;
  };
  for (const auto& [k, c] : terms) visit(k);
  for (const auto& [k, c] : num_terms) visit(k);
  return m;
}

int Germ::order_y() const {
  int o = -1;
  for (const auto& [k, c] : terms) {
    if (k.first == 0 && (o < 0 || k.second < o)) o = k.second;
  }
  for (const auto& [k, c] : num_terms) {
    if (k.first == 0 && (o < 0 || k.second < o)) o = k.second;
  }
  return o;
}

int Germ::order_x() const {
  int o = -1;
  for (const auto& [k, c] : terms) {
    if (k.second == 0 && (o < 0 || k.first < o)) o = k.first;
  }
  for (const auto& [k, c] : num_terms) {
    if (k.second == 0 && (o < 0 || k.first < o)) o = k.first;
  }
  return o;
}

std::string Germ::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    os << (first ? "" : " + ") << "(" << to_string(c) << ")*x^" << k.first << "*y^" << k.second;
    first = false;
  }
  for (const auto& [k, c] : num_terms) {
    os << (first ? "" : " + ") << "(" << c.value.real() << (c.value.imag() < 0 ? "" : "+") << c.value.imag()
       << "i)*x^" << k.first << "*y^" << k.second;
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<BlowUpPoint> blow_up_germ(const Germ& g, const GermOptions& opt) {
  const int m = g.multiplicity();
  if (m < 1) throw LocalError("blow_up_germ: the origin is not on the germ");
  std::vector<BlowUpPoint> out;
  for (const auto& [d, e] : initial_roots(g, m, opt)) {
    BlowUpPoint p;
    p.direction = d;
    p.intersection = e;
    p.strict = is_chart_b(d) ? chart_b(g, m) : chart_a(g, m, d);
    if (!p.strict.exact) clean(p.strict, opt);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> cone_pattern(const Germ& g, const GermOptions& opt) {
  const int m = g.multiplicity();
  if (m < 1) throw LocalError("cone_pattern: the origin is not on the germ");
  std::vector<int> out;
  for (const auto& [d, e] : initial_roots(g, m, opt)) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

Resolution resolve(const Germ& root, const GermOptions& opt) {
  Resolution res;
  // Returns the canonical sequence of the subtree at g; empty for a final point.
  std::function<std::vector<int>(const Germ&, bool, bool, int)> descend =
      [&](const Germ& g, bool ex, bool ey, int depth) -> std::vector<int> {
    if (depth > opt.max_depth) throw LocalError("resolution exceeded the recursion cap (non-reduced germ?)");
    res.depth = std::max(res.depth, depth);
    res.exact = res.exact && g.exact;
    const int m = g.multiplicity();
    if (m < 1) throw LocalError("resolution: the origin is not on the germ");
    if (m == 1) {
      const int through = (ex ? 1 : 0) + (ey ? 1 : 0);
      bool final_point = through == 0;
      if (through == 1) final_point = (ex ? g.order_y() : g.order_x()) == 1;
      if (final_point) {
        ++res.branches;
        return {};
      }
    }
    std::vector<std::vector<int>> children;
    for (const BlowUpPoint& p : blow_up_germ(g, opt)) {
      const bool b = is_chart_b(p.direction);
      const bool nx = b ? ex : true;
      const bool ny = b ? true : ey && is_zero_slope(p.direction, opt);
      // A simple point of the new exceptional line on no older one is final.
      if (p.intersection == 1 && !(b ? nx : ny)) {
        ++res.branches;
        continue;
      }
      children.push_back(descend(p.strict, nx, ny, depth + 1));
    }
    std::sort(children.begin(), children.end(), std::greater<>());
    std::vector<int> seq{m};
    for (const auto& c : children) seq.insert(seq.end(), c.begin(), c.end());
    return seq;
  };
  res.sequence = descend(root, false, false, 0);
  if (res.sequence.empty()) res.sequence = {1};
  res.delta = delta_of(res.sequence);
  return res;
}

int local_multiplicity(const MPoly& f, const AffinePoint& q, const GermOptions& opt) {
  const int m = Germ::at(f, q, opt).multiplicity();
  if (m < 0) throw LocalError("local_multiplicity: zero polynomial");
  return m;
}

int intersection_multiplicity(const MPoly& f0, const MPoly& g0, const AffinePoint& q) {
  MPoly f = in_xy(f0), g = in_xy(g0);
  if (f.is_zero() && g.is_zero()) throw LocalError("intersection_multiplicity: both polynomials are zero");
  if (!vanishes_at(f, q) || !vanishes_at(g, q)) return 0;
  if (f.is_zero() || g.is_zero()) throw LocalError("intersection_multiplicity: common component through the point");
  const MPoly h = gcd(f, g);
  if (!h.is_constant()) {
    if (vanishes_at(h, q)) throw LocalError("intersection_multiplicity: common component through the point");
    f = exact_divide(f, h).with_vars({"x", "y"});
    g = exact_divide(g, h).with_vars({"x", "y"});
  }
  std::vector<AffinePoint> zeros = common_zeros({f, g});
  if (std::none_of(zeros.begin(), zeros.end(), [&](const AffinePoint& z) { return same_point(z, q); })) {
    throw LocalError("intersection_multiplicity: " + q.str() + " not found among the common zeros");
  }

  // Shear so f is monic in y and the common zeros have distinct abscissae.
  const MPoly top = homogeneous_part(f, {"x", "y"}, f.total_degree());
  Rational c;
  bool found = false;
  for (int i = 0; i < 400 && !found; ++i) {
    c = shear_candidate(i);
    if (evaluate_exact(top, {{"x", c}, {"y", 1}}) == 0) continue;
    found = true;
    for (std::size_t u = 0; u < zeros.size() && found; ++u) {
      for (std::size_t v = u + 1; v < zeros.size() && found; ++v) {
        const AffinePoint& p = zeros[u];
        const AffinePoint& r = zeros[v];
        if (p.exact && r.exact) {
          found = p.a - c * p.b != r.a - c * r.b;
        } else {
          const Complex xp = p.za - c.get_d() * p.zb, xr = r.za - c.get_d() * r.zb;
          found = std::abs(xp - xr) > 1e-6 * (1 + std::max(std::abs(xp), std::abs(xr)));
        }
      }
    }
  }
  if (!found) throw LocalError("intersection_multiplicity: no separating shear");
  const MPoly x = MPoly::var("x"), y = MPoly::var("y");
  const MPoly F = substitute(f, {{"x", x + c * y}});
  const MPoly G = substitute(g, {{"x", x + c * y}});
  // F is monic in y; a G free of y gives Res = G^deg_y(F).
  MPoly R = (G.degree("y") <= 0 ? G.pow(F.degree("y")) : resultant(F, G, "y")).trimmed();
  if (R.is_zero()) throw InternalError("intersection_multiplicity: resultant vanishes after removing common factors");

  if (q.exact) {
    const Rational X = q.a - c * q.b;
    int count = 0;
    R = R.with_vars({"x"});
    while (!R.is_constant() && evaluate_exact(R, {{"x", X}}) == 0) {
      R = exact_divide(R, x - MPoly(X)).with_vars({"x"});
      ++count;
    }
    return count;
  }
  const Complex X = q.za - c.get_d() * q.zb;
  int best_mult = 0;
  double best = 1;
  for (const auto& [factor, mult] : squarefree_decomposition(R.with_vars({"x"}), "x")) {
    if (factor.degree("x") <= 0) continue;
    const double r = relative_residual(to_cpoly(factor, "x"), X);
    if (r < best) {
      best = r;
      best_mult = mult;
    }
  }
  if (best >= 1e-7) throw LocalError("intersection_multiplicity: abscissa of " + q.str() + " is not a root of the resultant");
  return best_mult;
}

int milnor_number(const MPoly& f0, const AffinePoint& q) {
  const MPoly f = in_xy(f0);
  return intersection_multiplicity(derivative(f, "x"), derivative(f, "y"), q);
}

bool GermFingerprint::operator==(const GermFingerprint& o) const {
  return m == o.m && mu == o.mu && r == o.r && delta == o.delta && mult_sequence == o.mult_sequence &&
         cone_pattern == o.cone_pattern;
}

std::string GermFingerprint::str() const {
  auto list = [](const std::vector<int>& v, char open, char close) {
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + close;
  };
  return "m=" + std::to_string(m) + " mu=" + std::to_string(mu) + " r=" + std::to_string(r) +
         " delta=" + std::to_string(delta) + " seq=" + list(mult_sequence, '[', ']') +
         " cone=" + list(cone_pattern, '{', '}');
}

GermFingerprint fingerprint(const MPoly& f0, const AffinePoint& q, const GermOptions& opt) {
  const MPoly f = in_xy(f0);
  if (f.is_constant()) throw LocalError("fingerprint: constant polynomial");
  if (squarefree_part(f).total_degree() != f.total_degree()) throw LocalError("fingerprint: curve is not reduced");
  if (!vanishes_at(f, q)) throw LocalError("fingerprint: " + q.str() + " is not on the curve");
  const Germ g = Germ::at(f, q, opt);
  const Resolution res = resolve(g, opt);
  GermFingerprint fp;
  fp.m = g.multiplicity();
  fp.mu = milnor_number(f, q);
  fp.r = res.branches;
  fp.mult_sequence = res.sequence;
  fp.cone_pattern = cone_pattern(g, opt);
  fp.exact = q.exact && res.exact;
  if ((fp.mu + fp.r - 1) % 2 != 0) {
    throw InternalError("fingerprint: mu + r - 1 is odd at " + q.str() + " (" + fp.str() + ")");
  }
  fp.delta = (fp.mu + fp.r - 1) / 2;
  if (fp.delta != res.delta) {
    throw InternalError("fingerprint: delta from mu and r is " + std::to_string(fp.delta) +
                        " but the multiplicity sequence gives " + std::to_string(res.delta) + " at " + q.str());
  }
  if (fp.mult_sequence.front() != fp.m) throw InternalError("fingerprint: sequence does not start with m");
  return fp;
}

MPoly homogenize(const MPoly& f0) {
  const MPoly f = in_xy(f0);
  const int n = f.total_degree();
  MPoly out;
  const int ix = f.var_index("x"), iy = f.var_index("y");
  for (const auto& [mono, c] : f.terms()) {
    out += MPoly::term("x", mono[ix]) * MPoly::term("y", mono[iy]) *
           MPoly::term("z", n - static_cast<int>(mono[ix] + mono[iy]), c);
  }
  return out;
}

MPoly chart_poly(const MPoly& F, Chart chart) {
  const MPoly x = MPoly::var("x"), y = MPoly::var("y");
  switch (chart) {
    case Chart::affine:
      return substitute(F, {{"z", MPoly(1)}}).trimmed();
    case Chart::x_one:
      return substitute(F, {{"x", MPoly(1)}, {"y", x}, {"z", y}}).trimmed();
    case Chart::y_one:
      return substitute(F, {{"y", MPoly(1)}, {"z", y}}).trimmed();
  }
  return F;
}

std::string chart_name(Chart chart) {
  switch (chart) {
    case Chart::affine:
      return "z=1";
    case Chart::x_one:
      return "x=1";
    case Chart::y_one:
      return "y=1";
  }
  return "";
}

std::vector<CurvePoint> singular_points_at_infinity(const MPoly& f) {
  const MPoly F = homogenize(f);
  std::vector<CurvePoint> out;
  const MPoly g1 = chart_poly(F, Chart::x_one).with_vars({"x", "y"});
  if (!g1.is_constant()) {
    for (const AffinePoint& p : common_zeros({g1, derivative(g1, "x"), derivative(g1, "y"), MPoly::var("y")})) {
      CurvePoint cp;
      cp.chart = Chart::x_one;
      cp.local = p;
      cp.point.exact = p.exact;
      cp.point.X = 1;
      cp.point.Y = p.a;
      cp.point.Z = 0;
      cp.point.zX = 1;
      cp.point.zY = p.za;
      cp.point.zZ = 0;
      out.push_back(cp);
    }
  }
  const MPoly g2 = chart_poly(F, Chart::y_one).with_vars({"x", "y"});
  const std::map<std::string, Rational> origin{{"x", 0}, {"y", 0}};
  if (evaluate_exact(g2, origin) == 0 && evaluate_exact(derivative(g2, "x"), origin) == 0 &&
      evaluate_exact(derivative(g2, "y"), origin) == 0) {
    CurvePoint cp;
    cp.chart = Chart::y_one;
    cp.local = AffinePoint::rational(0, 0);
    cp.point.X = 0;
    cp.point.Y = 1;
    cp.point.Z = 0;
    cp.point.zX = 0;
    cp.point.zY = 1;
    cp.point.zZ = 0;
    out.push_back(cp);
  }
  return out;
}

std::vector<CurvePoint> projective_singular_points(const MPoly& f) {
  std::vector<CurvePoint> out;
  for (const AffinePoint& p : curve_singular_points(in_xy(f))) {
    out.push_back(affine_curve_point(p));
  }
  for (const auto& cp : singular_points_at_infinity(f)) out.push_back(cp);
  return out;
}

GenusResult genus_of_curve(const MPoly& f0, GenusMode mode, Rng& rng) {
  const MPoly f = in_xy(f0);
  if (f.is_constant()) throw LocalError("genus_of_curve: constant polynomial");
  if (squarefree_part(f).total_degree() != f.total_degree()) throw LocalError("genus_of_curve: curve is not reduced");
  const ComponentCount cc = curve_components(f, rng);
  if (cc.components != 1) {
    throw LocalError("genus_of_curve: curve is reducible (" + std::to_string(cc.components) + " components)");
  }
  GenusResult out;
  out.degree = f.total_degree();
  const int n = out.degree;
  out.genus = (n - 1) * (n - 2) / 2;
  std::vector<CurvePoint> pts;
  if (mode == GenusMode::projective) {
    pts = projective_singular_points(f);
  } else {
    for (const AffinePoint& p : curve_singular_points(f)) {
      pts.push_back(affine_curve_point(p));
    }
  }
  const MPoly F = homogenize(f);
  for (const CurvePoint& cp : pts) {
    const GermFingerprint fp = fingerprint(chart_poly(F, cp.chart), cp.local);
    out.genus -= fp.delta;
    out.exact = out.exact && fp.exact;
    out.points.emplace_back(cp, fp);
  }
  return out;
}

}  // namespace polarweb
