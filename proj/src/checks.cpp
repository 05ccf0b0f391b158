#include "polarweb/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "polarweb/components.hpp"
#include "polarweb/foliation.hpp"
#include "polarweb/polar.hpp"

namespace polarweb {

namespace {

const MPoly kX = MPoly::var("x");
const MPoly kY = MPoly::var("y");

CheckReport start(const std::string& name, const SymWeb& w, const CheckOptions& opt) {
  CheckReport r;
  r.check = name;
  r.input = w.str();
  r.command = opt.command;
  r.seed = opt.seed;
  r.samples_requested = opt.samples;
  return r;
}

void skip(CheckReport& r, const std::string& why) {
  r.skipped = true;
  r.skip_reason = why;
}

bool on_singular_set(const SymWeb& w, const AffinePoint& p, double tol = 1e-9) {
  for (const MPoly& c : w.coefficients()) {
    if (!vanishes_at(c, p, tol)) return false;
  }
  return true;
}

bool reduced(const MPoly& f) { return squarefree_part(f).total_degree() == f.total_degree(); }

/// True when some line through p lies in the polar, i.e. p sits on a leaf
/// that is a line. Restricting to p + t (dx, dy), the line of direction
/// (dx : dy) is contained iff every t-coefficient vanishes there.
bool line_leaf_through(const MPoly& polar, const AffinePoint& p) {
  const MPoly t = MPoly::var("t");
  const MPoly on_line =
      substitute(polar, {{"x", MPoly(p.a) + t * MPoly::var("dx")}, {"y", MPoly(p.b) + t * MPoly::var("dy")}});
  return !gcd_all(coefficients(on_line, "t")).is_constant();
}

/// Whether a line leaf passes through every point, as for webs of degree 0
/// or webs of tangent lines. Decided at fixed random centres and cached.
bool line_leaves_everywhere(const SymWeb& w) {
  static std::map<std::string, bool> cache;
  const std::string key = w.form().str();
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Rng rng(0x5eed);
  bool all = true;
  for (int i = 0; i < 3 && all; ++i) {
    const Rational a = rng.rational(1000), b = rng.rational(1000);
    const PolarCurve polar = polar_curve(w, a, b);
    all = polar.whole_plane || line_leaf_through(polar.raw, AffinePoint::rational(a, b));
  }
  return cache[key] = all;
}

/// Empty when p is a usable generic centre for w.
std::string generic_reject(const SymWeb& w, const AffinePoint& p) {
  if (on_singular_set(w, p)) return "centre on Sing(W)";
  if (w.k() >= 2 && vanishes_at(w.discriminant(), p)) return "centre on the discriminant";
  const PolarCurve polar = polar_curve(w, p.a, p.b);
  if (polar.whole_plane) return "polar is the whole plane: W = L_p x W'";
  if (p.exact && !line_leaves_everywhere(w) && line_leaf_through(polar.raw, p)) return "centre on a leaf that is a line";
  return "";
}

bool exhausted(CheckReport& r, const std::optional<AffinePoint>& p) {
  if (p) return false;
  r.fail("no usable sample within the retry budget");
  return true;
}

Json points_json(const std::vector<AffinePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p.str());
  return out;
}

bool all_exact(const std::vector<AffinePoint>& pts) {
  return std::all_of(pts.begin(), pts.end(), [](const AffinePoint& p) { return p.exact; });
}

MPoly random_binary_form(Rng& rng, int degree) {
  while (true) {
    MPoly f;
    for (int i = 0; i <= degree; ++i) f += MPoly::term("dx", degree - i) * MPoly::term("dy", i, rng.rational(9));
    if (!f.is_zero()) return f.trimmed();
  }
}

Rational nonzero_rational(Rng& rng) {
  while (true) {
    const Rational c = rng.rational(9);
    if (c != 0) return c;
  }
}

Json direction_list(const std::vector<Direction>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(d.str());
  return out;
}

Foliation foliation_of(const SymWeb& w, const std::string& check) {
  if (w.k() != 1) throw WebError(check + " needs a foliation (k = 1), got k = " + std::to_string(w.k()));
  return Foliation::from_web(w);
}

std::string chart_label(const CurvePoint& cp) { return chart_name(cp.chart); }

/// Coordinates of a projective point in its chart, for nearest-neighbour matching.
double chart_distance(const CurvePoint& p, const CurvePoint& q) {
  if (p.chart != q.chart) return std::numeric_limits<double>::infinity();
  return std::abs(p.local.za - q.local.za) + std::abs(p.local.zb - q.local.zb);
}

struct SingularGerm {
  CurvePoint where;
  GermFingerprint fp;
};

std::vector<SingularGerm> projective_germs(const MPoly& f) {
  std::vector<SingularGerm> out;
  const MPoly F = homogenize(f);
  for (const CurvePoint& cp : projective_singular_points(f)) {
    out.push_back({cp, fingerprint(chart_poly(F, cp.chart), cp.local)});
  }
  return out;
}

}  // namespace

Json fingerprint_json(const GermFingerprint& fp) {
  return {{"m", fp.m},           {"mu", fp.mu},
          {"r", fp.r},           {"delta", fp.delta},
          {"mult_sequence", fp.mult_sequence}, {"cone_pattern", fp.cone_pattern},
          {"exact", fp.exact}};
}

bool is_radial_web(const SymWeb& w) {
  if (w.k() != 1) return false;
  const MPoly a0 = w.coefficients()[0].trimmed().with_vars({"x", "y"});
  const MPoly a1 = w.coefficients()[1].trimmed().with_vars({"x", "y"});
  if (a0.total_degree() != 1 || a1.total_degree() != 1) return false;
  const MPoly c = derivative(a1, "x");
  if (!c.is_constant() || c.is_zero()) return false;
  return derivative(a1, "y").is_zero() && derivative(a0, "x").is_zero() && derivative(a0, "y") == -c;
}

CheckReport polar_degree_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("polar-degree", w, opt);
  Rng rng(opt.seed);
  const int d = web_degree(w, rng);
  const int expected = d + w.k();
  r.notes.push_back("degeneracy set: Sing(W), the discriminant, centres with identically zero polar");
  r.summary = {{"d", d}, {"k", w.k()}, {"expected_degree", expected}};
  Sampler s(rng, r, opt.max_tries);
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
    if (exhausted(r, p)) break;
    s.accept();
    const PolarCurve pc = polar_curve(w, p->a, p->b);
    const int deg = pc.raw.total_degree();
    r.add_sample({{"center", p->str()}, {"polar", canonical(pc.raw).str()}, {"degree", deg}}, deg == expected);
  }
  return r;
}

CheckReport polar_equality_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("polar-equality", w, opt);
  Rng rng(opt.seed);
  r.notes.push_back("constructed pair: W2 = W + radial(p) * beta; perturbed pair: W3 = W + c * dx^k");
  Sampler s(rng, r, opt.max_tries);
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
    if (exhausted(r, p)) break;
    const MPoly beta = random_binary_form(rng, w.k() - 1);
    const Rational c = nonzero_rational(rng);
    const MPoly perturbation = MPoly::term("dx", w.k(), c);
    SymWeb w2, w3;
    try {
      w2 = SymWeb::from_form(w.form() + radial_form(p->a, p->b) * beta);
      w3 = SymWeb::from_form(w.form() + perturbation);
    } catch (const WebError& e) {
      s.discard(*p, std::string("modified web is not valid: ") + e.what());
      continue;
    }
    s.accept();
    const PolarEquality eq = polar_equality_criterion(w, w2, p->a, p->b);
    const PolarEquality ne = polar_equality_criterion(w, w3, p->a, p->b);
    const bool cofactor_ok = eq.identical || (eq.quotient && *eq.quotient == beta);
    const bool ok = eq.divisible && eq.polars_equal && cofactor_ok && eq.routes_agree() && !ne.divisible &&
                    !ne.polars_equal && ne.routes_agree();
    Json record = {{"center", p->str()},
                   {"beta", beta.str()},
                   {"constructed",
                    {{"divisible", eq.divisible},
                     {"polars_equal", eq.polars_equal},
                     {"quotient", eq.quotient ? eq.quotient->str() : std::string()}}},
                   {"perturbation", perturbation.str()},
                   {"perturbed", {{"divisible", ne.divisible}, {"polars_equal", ne.polars_equal}}}};
    r.add_sample(record, ok);
  }
  return r;
}

CheckReport k2_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("k2", w, opt);
  Rng rng(opt.seed);
  const int expected = w.k() * w.k();
  r.notes.push_back("intersections of the tangent lines at p1 and p2, counted in the projective plane");
  r.summary = {{"k", w.k()}, {"expected", expected}};
  Sampler s(rng, r, opt.max_tries);
  const auto generic = [&](const AffinePoint& q) { return generic_reject(w, q); };
  while (r.samples_used < opt.samples) {
    const auto p1 = s.draw(generic);
    if (exhausted(r, p1)) break;
    const auto p2 = s.draw([&](const AffinePoint& q) {
      return same_point(q, *p1) ? std::string("p2 = p1") : generic(q);
    });
    if (exhausted(r, p2)) break;
    const FamilyDegree fd = family_degree(w, *p1, *p2);
    if (fd.degenerate) {
      s.discard(p1->str() + " " + p2->str(), fd.reason);
      continue;
    }
    s.accept();
    Json pts = Json::array();
    int at_infinity = 0;
    bool exact = true;
    for (const auto& q : fd.points) {
      pts.push_back(q.str());
      at_infinity += q.at_infinity() ? 1 : 0;
      exact = exact && q.exact;
    }
    r.add_sample({{"p1", p1->str()},
                  {"p2", p2->str()},
                  {"count", fd.count},
                  {"at_infinity", at_infinity},
                  {"points", pts},
                  {"cross_check", fd.cross_check},
                  {"max_residual", fd.max_residual}},
                 fd.count == expected && fd.cross_check, exact);
  }
  return r;
}

CheckReport family_dim_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("family-dim", w, opt);
  Rng rng(opt.seed);
  const bool radial = is_radial_web(w);
  const int expected = radial ? 1 : 2;
  const MPoly parametric = parametric_polar(w);
  r.notes.push_back("dimension = max over centres of rank([c; dc/da; dc/db]) - 1");
  Sampler s(rng, r, opt.max_tries);
  int dimension = -1;
  while (r.samples_used < opt.samples) {
    const auto p = s.draw({});
    if (exhausted(r, p)) break;
    s.accept();
    const int rank = family_rank_at(parametric, p->a, p->b);
    dimension = std::max(dimension, rank);
    r.add_sample({{"center", p->str()}, {"rank", rank}}, rank <= expected);
  }
  r.summary = {{"radial", radial}, {"expected", expected}, {"dimension", dimension}};
  if (dimension != expected) r.fail("family dimension " + std::to_string(dimension));
  return r;
}

CheckReport base_points_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("base-points", w, opt);
  r.samples_requested = 1;
  Rng rng(opt.seed);
  r.notes.push_back("one exact computation: common zeros of the (a, b)-coefficients of the parametric polar");
  const PolarFamily family = polar_family(w, rng);
  const BasePoints bp = base_points(family, w);
  Json coeffs = Json::array();
  for (const auto& c : bp.coefficients) coeffs.push_back(c.str());
  r.add_sample({{"parametric", family.parametric.str()},
                {"coefficients", coeffs},
                {"base_points", points_json(bp.points)},
                {"outside_singular_set", points_json(bp.outside_singular_set)}},
               bp.outside_singular_set.empty(), all_exact(bp.points));
  return r;
}

CheckReport sing_locus_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("sing-locus", w, opt);
  Rng rng(opt.seed);
  r.notes.push_back("each singular point of P_p is classified as the centre, a point of the discriminant "
                    "or a singular point of W");
  Sampler s(rng, r, opt.max_tries);
  const MPoly& disc = w.discriminant();
  int in_sing_only = 0;
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
    if (exhausted(r, p)) break;
    const MPoly raw = polar_curve(w, p->a, p->b).raw;
    if (!reduced(raw)) {
      s.discard(*p, "polar is not reduced");
      continue;
    }
    s.accept();
    const auto sing = curve_singular_points(raw);
    Json pts = Json::array();
    bool ok = true;
    for (const AffinePoint& q : sing) {
      std::string where;
      double residual = 0;
      if (same_point(q, *p, opt.residual_tol)) {
        where = "centre";
      } else if (w.k() >= 2 && vanishes_at(disc, q, opt.residual_tol)) {
        where = "discriminant";
        residual = residual_at(disc, q);
      } else if (on_singular_set(w, q, opt.residual_tol)) {
        where = "singular set of W";
        ++in_sing_only;
      } else {
        where = "violation";
        ok = false;
        if (w.k() >= 2) residual = residual_at(disc, q);
      }
      Json e = {{"point", q.str()}, {"lies_on", where}};
      if (!q.exact) e["residual"] = residual;
      pts.push_back(e);
    }
    r.add_sample({{"center", p->str()}, {"polar", canonical(raw).str()}, {"singular_points", pts}}, ok,
                 all_exact(sing));
  }
  r.summary = {{"k", w.k()}, {"points_in_sing_w_off_discriminant", in_sing_only}};
  return r;
}

CheckReport branches_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("branches", w, opt);
  Rng rng(opt.seed);
  Sampler s(rng, r, opt.max_tries);
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
    if (exhausted(r, p)) break;
    s.accept();
    const CenterBranches cb = branches_at_center(w, p->a, p->b);
    Json factors = Json::array();
    bool exact = true;
    for (const auto& [dir, mult] : cb.cone.factors) {
      factors.push_back({{"direction", dir.str()}, {"multiplicity", mult}});
      exact = exact && dir.exact;
    }
    r.add_sample({{"center", p->str()},
                  {"cone", cb.cone.cone.str()},
                  {"factors", factors},
                  {"web_directions", direction_list(cb.web_directions)},
                  {"k_distinct", cb.k_distinct},
                  {"match", cb.match}},
                 cb.k_distinct && cb.match, exact);
  }
  return r;
}

CheckReport irreducible_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("irreducible", w, opt);
  Rng rng(opt.seed);
  const int d = web_degree(w, rng);
  const ComponentCount wc = web_components(w, rng);
  const bool predicted = wc.components == 1 && (d >= 1 || w.k() == 1);
  r.notes.push_back("components counted by monodromy of a generic line-section cover");
  r.summary = {{"d", d},
               {"k", w.k()},
               {"web_components", wc.components},
               {"web_partition", wc.monodromy.partition},
               {"predicted", predicted ? "irreducible" : "decomposable"}};
  Sampler s(rng, r, opt.max_tries);
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
    if (exhausted(r, p)) break;
    s.accept();
    const MPoly raw = polar_curve(w, p->a, p->b).raw;
    const ComponentCount cc = curve_components(raw, rng);
    const bool irreducible = cc.components == 1;
    const bool certified = cc.monodromy.max_residual < opt.residual_tol;
    r.add_sample({{"center", p->str()},
                  {"polar", canonical(raw).str()},
                  {"reduced", cc.reduced},
                  {"components", cc.components},
                  {"partition", cc.monodromy.partition},
                  {"branch_points", cc.branch_points.size()},
                  {"min_separation", cc.monodromy.min_separation},
                  {"max_step_ratio", cc.monodromy.max_step_ratio},
                  {"max_residual", cc.monodromy.max_residual},
                  {"base_retries", cc.base_retries}},
                 irreducible == predicted && certified, false);
  }
  return r;
}

CheckReport sing_in_e_check(const Foliation& f, const CheckOptions& opt) {
  CheckReport r = start("sing-in-E", f.web, opt);
  const InflexionDivisor e = inflexion_divisor(f);
  if (e.all_leaves_lines) {
    skip(r, "E(F) vanishes identically: every leaf is a line");
    return r;
  }
  r.notes.push_back("centres are not required to be generic");
  r.summary = {{"E", e.curve.defining.str()}};
  Rng rng(opt.seed);
  Sampler s(rng, r, opt.max_tries);
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) {
      return polar_curve(f.web, q.a, q.b).whole_plane ? std::string("polar is the whole plane") : std::string();
    });
    if (exhausted(r, p)) break;
    const MPoly raw = polar_curve(f.web, p->a, p->b).raw;
    if (!reduced(raw)) {
      s.discard(*p, "polar is not reduced");
      continue;
    }
    s.accept();
    const auto sing = curve_singular_points(raw);
    Json pts = Json::array();
    bool ok = true;
    for (const AffinePoint& q : sing) {
      const bool on = vanishes_at(e.raw, q, opt.residual_tol);
      ok = ok && on;
      Json entry = {{"point", q.str()}, {"on_E", on}};
      if (!q.exact) entry["residual"] = residual_at(e.raw, q);
      pts.push_back(entry);
    }
    r.add_sample({{"center", p->str()}, {"polar", canonical(raw).str()}, {"singular_points", pts}}, ok,
                 all_exact(sing));
  }
  return r;
}

CheckReport qr_dichotomy_check(const Foliation& f, const CheckOptions& opt) {
  CheckReport r = start("qr-dichotomy", f.web, opt);
  const auto sings = foliation_singularities(f);
  Json table = Json::array();
  for (const auto& sg : sings) {
    Json e = {{"point", sg.point.str()}, {"chart", chart_name(sg.chart)}, {"local", sg.local.str()}, {"jet_order", sg.cls.jet_order}, {"quasi_radial", sg.cls.quasi_radial}};
    if (sg.cls.cofactor) e["cofactor"] = sg.cls.cofactor->str();
    if (!sg.cls.exact) e["criterion_residual"] = sg.cls.criterion_residual;
    table.push_back(e);
  }
  r.summary = {{"singularities", table}};
  r.notes.push_back("singular points at infinity are tested in the chart containing them");
  if (sings.empty()) {
    skip(r, "F has no singular points");
    return r;
  }
  const Foliation fx = foliation_chart(f, Chart::x_one), fy = foliation_chart(f, Chart::y_one);
  Rng rng(opt.seed);
  Sampler s(rng, r, opt.max_tries);
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) {
      if (on_singular_set(f.web, q)) return std::string("centre on Sing(F)");
      return std::string();
    });
    if (exhausted(r, p)) break;
    std::vector<ConeLine> lines;
    std::string special;
    for (const auto& sg : sings) {
      // The centre (a, b) is (b/a, 1/a) in the chart x = 1 and (a/b, 1/b) in y = 1.
      const Rational& u = sg.chart == Chart::x_one ? p->a : p->b;
      if (sg.chart != Chart::affine && u == 0) {
        special = "centre on the line through the origin and " + sg.point.str();
        break;
      }
      const Rational& v = sg.chart == Chart::x_one ? p->b : p->a;
      const AffinePoint local = sg.chart == Chart::affine ? *p : AffinePoint::rational(v / u, Rational(1) / u);
      const Foliation& g = sg.chart == Chart::affine ? f : (sg.chart == Chart::x_one ? fx : fy);
      lines.push_back(tangent_cone_line(g, sg.cls, local));
      if (lines.back().degenerate) {
        special = "centre special at " + sg.local.str() + ": " + lines.back().reason;
        break;
      }
    }
    if (!special.empty()) {
      s.discard(*p, special);
      continue;
    }
    s.accept();
    Json per = Json::array();
    bool ok = true, exact = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const ConeLine& cl = lines[i];
      ok = ok && cl.line_multiplicity == cl.expected;
      exact = exact && cl.q.exact;
      per.push_back({{"point", sings[i].point.str()},
                     {"chart", chart_name(sings[i].chart)},
                     {"quasi_radial", cl.quasi_radial},
                     {"cone_order", cl.cone_order},
                     {"line_multiplicity", cl.line_multiplicity},
                     {"expected", cl.expected}});
    }
    r.add_sample({{"center", p->str()}, {"at", per}}, ok, exact);
  }
  return r;
}

CheckReport inflexion_lemma_check(const Foliation& f, const CheckOptions& opt) {
  CheckReport r = start("inflexion-lemma", f.web, opt);
  const InflexionDivisor e = inflexion_divisor(f);
  if (e.all_leaves_lines) {
    skip(r, "E(F) vanishes identically: every leaf is a line");
    return r;
  }
  const int n_on = std::max(5, opt.samples / 4);
  const int n_off = std::max(15, opt.samples - n_on);
  r.samples_requested = n_on + n_off;
  r.notes.push_back("stratified: " + std::to_string(n_on) + " regular points on E(F), " + std::to_string(n_off) +
                    " off it");
  Rng rng(opt.seed);
  Sampler s(rng, r, opt.max_tries);
  const auto regular = [&](const AffinePoint& q) { return !on_singular_set(f.web, q, opt.residual_tol); };
  int on_used = 0;
  if (e.curve.is_empty()) {
    r.notes.push_back("E(F) has no affine points; only the off-E direction is exercised");
  } else {
    const auto candidates = points_on_curve(e.curve.defining, rng, n_on + opt.max_tries);
    for (const CurveSample& c : candidates) {
      if (on_used == n_on) break;
      if (!regular(c.point)) {
        s.discard(c.point, "singular point of F");
        continue;
      }
      const InflexionTest t = polar_inflexion_at_center(f, c.point);
      r.add_sample({{"center", c.point.str()},
                    {"side", "on E"},
                    {"strategy", c.strategy},
                    {"inflexion", t.inflexion},
                    {"expected", true},
                    {"residual", t.residual}},
                   t.inflexion, t.exact && c.point.exact);
      ++on_used;
    }
    s.accept();
    if (on_used < n_on) r.fail("only " + std::to_string(on_used) + " regular points of E(F) found");
  }
  int off_used = 0;
  while (off_used < n_off) {
    const auto p = s.draw([&](const AffinePoint& q) {
      if (!regular(q)) return std::string("singular point of F");
      if (vanishes_at(e.raw, q)) return std::string("on E(F)");
      return std::string();
    });
    if (exhausted(r, p)) break;
    s.accept();
    const InflexionTest t = polar_inflexion_at_center(f, *p);
    r.add_sample({{"center", p->str()}, {"side", "off E"}, {"inflexion", t.inflexion}, {"expected", false}},
                 !t.inflexion, t.exact);
    ++off_used;
  }
  r.summary = {{"E", e.curve.defining.str()}, {"on_E", on_used}, {"off_E", off_used}};
  return r;
}

CheckReport qr_bound_check(const Foliation& f, const CheckOptions& opt) {
  CheckReport r = start("qr-bound", f.web, opt);
  const InflexionDivisor e = inflexion_divisor(f);
  if (e.all_leaves_lines) {
    skip(r, "E(F) vanishes identically: every leaf is a line");
    return r;
  }
  const auto sings = foliation_singularities(f, true);
  int qr = 0, qr_affine = 0;
  Json table = Json::array();
  for (const auto& sg : sings) {
    if (sg.cls.quasi_radial) {
      ++qr;
      if (sg.chart == Chart::affine) ++qr_affine;
    }
    table.push_back({{"point", sg.point.str()}, {"chart", chart_name(sg.chart)}, {"quasi_radial", sg.cls.quasi_radial}});
  }
  r.notes.push_back("quasi-radial singular points counted in the projective plane");
  r.summary = {{"singularities", table}, {"qr", qr}, {"qr_affine", qr_affine}};
  if (sings.empty()) {
    skip(r, "F has no singular points");
    return r;
  }
  Rng rng(opt.seed);
  Sampler s(rng, r, opt.max_tries);
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) {
      const std::string why = generic_reject(f.web, q);
      if (!why.empty()) return why;
      if (vanishes_at(e.raw, q)) return std::string("centre on E(F)");
      return std::string();
    });
    if (exhausted(r, p)) break;
    const MPoly raw = polar_curve(f.web, p->a, p->b).raw;
    if (!reduced(raw) || raw.total_degree() < 2) {
      s.discard(*p, "polar is not a reduced curve of degree >= 2");
      continue;
    }
    CurveClass cls;
    try {
      cls = class_of_curve(raw, rng, 2);
    } catch (const LocalError& err) {
      s.discard(*p, err.what());
      continue;
    }
    s.accept();
    r.add_sample({{"center", p->str()},
                  {"polar", canonical(raw).str()},
                  {"class", cls.value},
                  {"class_values", cls.values},
                  {"consistent", cls.consistent},
                  {"bound", cls.value - 1},
                  {"qr", qr}},
                 cls.consistent && qr <= cls.value - 1, cls.exact);
  }
  return r;
}

CheckReport equising_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("equising", w, opt);
  r.notes.push_back("equisingularity proxy: constancy of the germ fingerprint (m, mu, r, delta, multiplicity "
                    "sequence, tangent cone pattern) at every singular point in the projective plane");
  r.notes.push_back("points are matched by exact equality when fixed, by nearest neighbour in the chart otherwise");
  Rng rng(opt.seed);
  Sampler s(rng, r, opt.max_tries);
  std::vector<SingularGerm> reference;
  int ref_degree = -1;
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
    if (exhausted(r, p)) break;
    const MPoly raw = canonical(polar_curve(w, p->a, p->b).raw);
    if (!reduced(raw)) {
      s.discard(*p, "polar is not reduced");
      continue;
    }
    const std::vector<SingularGerm> germs = projective_germs(raw);
    const int degree = raw.total_degree();
    if (r.samples_used > 0 && germs.size() != reference.size()) {
      s.discard(*p, "singular point count " + std::to_string(germs.size()) + " differs from the reference " +
                        std::to_string(reference.size()));
      continue;
    }
    s.accept();
    if (r.samples_used == 0) {
      reference = germs;
      ref_degree = degree;
    }
    // Exact matches first, then greedy nearest neighbours.
    std::vector<int> match(germs.size(), -1);
    std::vector<bool> taken(reference.size(), false);
    for (std::size_t i = 0; i < germs.size(); ++i) {
      for (std::size_t j = 0; j < reference.size(); ++j) {
        if (!taken[j] && germs[i].where.point.exact && reference[j].where.point.exact &&
            same_proj_point(germs[i].where.point, reference[j].where.point)) {
          match[i] = static_cast<int>(j);
          taken[j] = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < germs.size(); ++i) {
      if (match[i] >= 0) continue;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < reference.size(); ++j) {
        if (taken[j]) continue;
        const double dist = chart_distance(germs[i].where, reference[j].where);
        if (dist < best || match[i] < 0) {
          best = dist;
          match[i] = static_cast<int>(j);
        }
      }
      if (match[i] >= 0) taken[match[i]] = true;
    }
    bool ok = degree == ref_degree, exact = true;
    Json pts = Json::array();
    for (std::size_t i = 0; i < germs.size(); ++i) {
      const bool same = match[i] >= 0 && germs[i].fp == reference[match[i]].fp;
      ok = ok && same;
      exact = exact && germs[i].fp.exact;
      pts.push_back({{"point", germs[i].where.point.str()},
                     {"chart", chart_label(germs[i].where)},
                     {"matched", match[i]},
                     {"fingerprint", fingerprint_json(germs[i].fp)},
                     {"same_as_reference", same}});
    }
    r.add_sample({{"center", p->str()}, {"degree", degree}, {"singular_points", pts}}, ok, exact);
  }
  Json table = Json::array();
  for (const auto& g : reference) {
    table.push_back({{"point", g.where.point.str()}, {"chart", chart_label(g.where)}, {"fingerprint", fingerprint_json(g.fp)}});
  }
  r.summary = {{"degree", ref_degree}, {"singular_points", reference.size()}, {"reference", table}};
  return r;
}

CheckReport genus_constant_check(const SymWeb& w, const CheckOptions& opt) {
  CheckReport r = start("genus-constant", w, opt);
  const bool projective = opt.genus_mode == GenusMode::projective;
  r.notes.push_back(std::string("genus mode: ") +
                    (projective ? "projective (singular points at infinity included)" : "affine"));
  Rng rng(opt.seed);
  Sampler s(rng, r, opt.max_tries);
  int reference = 0;
  while (r.samples_used < opt.samples) {
    const auto p = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
    if (exhausted(r, p)) break;
    const MPoly raw = canonical(polar_curve(w, p->a, p->b).raw);
    if (!reduced(raw)) {
      s.discard(*p, "polar is not reduced");
      continue;
    }
    GenusResult g;
    try {
      g = genus_of_curve(raw, opt.genus_mode, rng);
    } catch (const LocalError& err) {
      if (r.samples_used == 0) {
        skip(r, std::string("the generic polar is not irreducible: ") + err.what());
        return r;
      }
      s.discard(*p, err.what());
      continue;
    }
    s.accept();
    if (r.samples_used == 0) reference = g.genus;
    Json pts = Json::array();
    for (const auto& [cp, fp] : g.points) {
      pts.push_back({{"point", cp.point.str()}, {"chart", chart_name(cp.chart)}, {"delta", fp.delta}});
    }
    r.add_sample({{"center", p->str()}, {"degree", g.degree}, {"genus", g.genus}, {"singular_points", pts}},
                 g.genus == reference, g.exact);
  }
  r.summary = {{"genus", reference}, {"mode", projective ? "projective" : "affine"}};
  return r;
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{
      "polar-degree", "polar-equality",  "k2",        "family-dim", "base-points",
      "sing-locus",   "branches",        "irreducible", "inflexion-lemma", "sing-in-E",
      "qr-dichotomy", "qr-bound",        "equising",  "genus-constant"};
  return names;
}

CheckReport run_check(const std::string& theorem, const SymWeb& w, const CheckOptions& opt) {
  if (theorem == "polar-degree") return polar_degree_check(w, opt);
  if (theorem == "polar-equality") return polar_equality_check(w, opt);
  if (theorem == "k2") return k2_check(w, opt);
  if (theorem == "family-dim") return family_dim_check(w, opt);
  if (theorem == "base-points") return base_points_check(w, opt);
  if (theorem == "sing-locus") return sing_locus_check(w, opt);
  if (theorem == "branches") return branches_check(w, opt);
  if (theorem == "irreducible") return irreducible_check(w, opt);
  if (theorem == "inflexion-lemma") return inflexion_lemma_check(foliation_of(w, theorem), opt);
  if (theorem == "sing-in-E") return sing_in_e_check(foliation_of(w, theorem), opt);
  if (theorem == "qr-dichotomy") return qr_dichotomy_check(foliation_of(w, theorem), opt);
  if (theorem == "qr-bound") return qr_bound_check(foliation_of(w, theorem), opt);
  if (theorem == "equising") return equising_check(w, opt);
  if (theorem == "genus-constant") return genus_constant_check(w, opt);
  throw std::invalid_argument("unknown theorem: " + theorem);
}

}  // namespace polarweb
