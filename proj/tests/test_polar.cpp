#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "battery.hpp"
#include "polarweb/components.hpp"
#include "polarweb/parse.hpp"
#include "polarweb/polar.hpp"

using namespace polarweb;

namespace {

MPoly P(const char* s) { return parse_poly(s); }
SymWeb W(const char* s) { return SymWeb::from_form(P(s)); }

// A rational centre off Sing(W) and the discriminant.
AffinePoint generic_center(const SymWeb& w, Rng& rng) {
  for (int i = 0; i < 50; ++i) {
    const AffinePoint p = AffinePoint::rational(rng.rational(), rng.rational());
    if (is_smooth_point(w, p).smooth) return p;
  }
  FAIL("no generic centre");
  return {};
}

ProjPoint proj(long X, long Y, long Z) {
  ProjPoint p;
  p.X = X;
  p.Y = Y;
  p.Z = Z;
  p.zX = X;
  p.zY = Y;
  p.zZ = Z;
  return p;
}

bool contains(const std::vector<ProjPoint>& pts, const ProjPoint& q) {
  for (const auto& p : pts) {
    if (same_proj_point(p, q)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("polar curve examples") {
  const PolarCurve radial = polar_curve(W("x*dy - y*dx"), 2, 3);
  REQUIRE_FALSE(radial.whole_plane);
  CHECK(radial.curve.defining == canonical(P("2*y - 3*x")));
  CHECK(radial.curve.degree() == 1);

  const PolarCurve conic = polar_curve(W("x*dx + y*dy"), 2, 3);
  CHECK(conic.curve.defining == canonical(P("x^2 + y^2 - 2*x - 3*y")));
  CHECK(conic.curve.degree() == 2);

  const PolarCurve product = polar_curve(W("dx*dy"), 2, 3);
  CHECK(product.raw == P("(x - 2)*(y - 3)"));
  CHECK(product.curve.degree() == 2);

  const PolarCurve cubic = polar_curve(W("dy^2 - x*dx^2"), Rational(1, 2), -1);
  CHECK(cubic.raw == P("(y + 1)^2 - x*(x - 1/2)^2"));
  CHECK(cubic.curve.degree() == 3);
}

TEST_CASE("polar of a product with the radial foliation is the whole plane") {
  const PolarCurve pc = polar_curve(W("(x*dy - y*dx)*dx"), 0, 0);
  CHECK(pc.whole_plane);
  REQUIRE(pc.cofactor);
  CHECK(*pc.cofactor == P("dx"));

  const PolarCurve shifted = polar_curve(W("((x - 1)*dy - (y + 2)*dx)*(x*dx + dy)"), 1, -2);
  CHECK(shifted.whole_plane);
  CHECK(*shifted.cofactor == P("x*dx + dy"));

  const PolarCurve lp = polar_curve(W("x*dy - y*dx"), 0, 0);
  CHECK(lp.whole_plane);
  CHECK(*lp.cofactor == P("1"));
}

TEST_CASE("polar degree is d + k at generic centres") {
  Rng rng(11);
  for (const auto& e : battery::all()) {
    CAPTURE(e.name);
    const int d = web_degree(e.web, rng);
    for (int s = 0; s < 6; ++s) {
      const AffinePoint p = generic_center(e.web, rng);
      const PolarCurve pc = polar_curve(e.web, p.a, p.b);
      REQUIRE_FALSE(pc.whole_plane);
      CAPTURE(p.str());
      CHECK(pc.curve.degree() == d + e.web.k());
    }
  }
}

TEST_CASE("polar of a superposition is the product of polars") {
  Rng rng(5);
  const auto entries = battery::all();
  for (int trial = 0; trial < 12; ++trial) {
    const auto& e1 = entries[rng.uniform_int(0, static_cast<long>(entries.size()) - 1)];
    const auto& e2 = entries[rng.uniform_int(0, static_cast<long>(entries.size()) - 1)];
    const Rational a = rng.rational(), b = rng.rational();
    const SymWeb prod = superpose(e1.web, e2.web).web;
    CAPTURE(e1.name);
    CAPTURE(e2.name);
    CHECK(polar_curve(prod, a, b).raw == polar_curve(e1.web, a, b).raw * polar_curve(e2.web, a, b).raw);
  }
}

TEST_CASE("polar equality criterion examples") {
  const SymWeb w1 = W("dy^2 - x*dx^2");
  const SymWeb w2 = W("dy^2 - x*dx^2 + (x*dy - y*dx)*dx");
  const PolarEquality eq = polar_equality_criterion(w1, w2, 0, 0);
  CHECK(eq.divisible);
  REQUIRE(eq.quotient);
  CHECK(*eq.quotient == P("dx"));
  CHECK(eq.polars_equal);
  CHECK(eq.polar_curves_equal);
  CHECK_FALSE(eq.identical);

  const PolarEquality ne = polar_equality_criterion(W("dx*dy"), W("dx*dy + dx^2"), 0, 0);
  CHECK_FALSE(ne.divisible);
  CHECK_FALSE(ne.quotient);
  CHECK_FALSE(ne.polars_equal);
  CHECK_FALSE(ne.polar_curves_equal);

  const PolarEquality same = polar_equality_criterion(w1, w1, 3, 4);
  CHECK(same.identical);
  CHECK(same.polars_equal);
}

TEST_CASE("polar equality routes agree") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = static_cast<int>(rng.uniform_int(1, 3));
    MPoly f1, g;
    for (int i = 0; i <= k; ++i) {
      f1 += battery::random_poly(rng, 1, 5) * MPoly::term("dx", k - i) * MPoly::term("dy", i);
    }
    for (int i = 0; i < k; ++i) {
      g += battery::random_poly(rng, 1, 5) * MPoly::term("dx", k - 1 - i) * MPoly::term("dy", i);
    }
    const Rational a = rng.rational(9), b = rng.rational(9);
    if (f1.is_zero() || g.is_zero()) continue;
    const bool planted = trial % 2 == 0;
    const MPoly f2 = planted ? f1 + radial_form(a, b) * g
                             : f1 + g * (MPoly::var("dx") + MPoly::var("dy"));
    MPoly r1, r2;
    const SymWeb w1 = SymWeb::from_form(f1, &r1);
    const SymWeb w2 = SymWeb::from_form(f2, &r2);
    if (!r1.is_constant() || !r2.is_constant()) continue;
    const PolarEquality eq = polar_equality_criterion(w1, w2, a, b);
    CHECK(eq.routes_agree());
    if (planted) CHECK(eq.divisible);
    if (eq.quotient && !eq.identical) CHECK(*eq.quotient * radial_form(a, b) == f2 - f1);
  }
}

TEST_CASE("polar family and base points") {
  Rng rng(3);
  CHECK(polar_family(W("dx*dy"), rng).parametric == P("(x - a)*(y - b)"));
  const PolarFamily circles = polar_family(W("x*dx + y*dy"), rng);
  CHECK(circles.parametric == P("x^2 + y^2 - a*x - b*y"));
  CHECK(circles.k == 1);
  CHECK(circles.d == 1);
  CHECK(polar_family(W("x*dy - y*dx"), rng).parametric == P("a*y - b*x"));

  const BasePoints bc = base_points(circles, W("x*dx + y*dy"));
  REQUIRE(bc.points.size() == 1);
  CHECK(same_point(bc.points[0], AffinePoint::rational(0, 0)));
  CHECK(bc.outside_singular_set.empty());
  CHECK(bc.coefficients.size() == 3);

  const BasePoints bp = base_points(polar_family(W("dx*dy"), rng), W("dx*dy"));
  CHECK(bp.points.empty());
  CHECK(bp.coefficients.size() == 4);

  const BasePoints br = base_points(polar_family(W("x*dy - y*dx"), rng), W("x*dy - y*dx"));
  REQUIRE(br.points.size() == 1);
  CHECK(same_point(br.points[0], AffinePoint::rational(0, 0)));
}

TEST_CASE("base points lie in the singular set") {
  Rng rng(8);
  for (const auto& e : battery::all()) {
    CAPTURE(e.name);
    const BasePoints bp = base_points(polar_family(e.web, rng), e.web);
    CHECK(bp.outside_singular_set.empty());
  }
}

TEST_CASE("family dimension") {
  Rng rng(4);
  CHECK(family_dimension(W("x*dy - y*dx"), rng) == 1);
  CHECK(family_dimension(W("x*dx + y*dy"), rng) == 2);
  CHECK(family_dimension(W("dx*dy"), rng) == 2);
  for (const auto& e : battery::all()) {
    CAPTURE(e.name);
    CHECK(family_dimension(e.web, rng) == (e.radial ? 1 : 2));
  }
}

TEST_CASE("family degree example") {
  const FamilyDegree fd = family_degree(W("dx*dy"), AffinePoint::rational(0, 0), AffinePoint::rational(1, 2));
  REQUIRE_FALSE(fd.degenerate);
  CHECK(fd.count == 4);
  CHECK(contains(fd.points, proj(0, 2, 1)));
  CHECK(contains(fd.points, proj(1, 0, 1)));
  CHECK(contains(fd.points, proj(1, 0, 0)));
  CHECK(contains(fd.points, proj(0, 1, 0)));
  CHECK(fd.cross_check);

  const FamilyDegree tangent = family_degree(W("dx*dy"), AffinePoint::rational(0, 0), AffinePoint::rational(0, 2));
  CHECK(tangent.degenerate);
  CHECK(family_degree(W("dx*dy"), AffinePoint::rational(1, 1), AffinePoint::rational(1, 1)).degenerate);
  CHECK(family_degree(W("dy^2 - x*dx^2"), AffinePoint::rational(0, 1), AffinePoint::rational(1, 2)).degenerate);
}

TEST_CASE("family degree is k squared") {
  Rng rng(21);
  for (const auto& e : battery::all()) {
    if (e.radial) continue;
    CAPTURE(e.name);
    int done = 0;
    for (int s = 0; s < 50 && done < 4; ++s) {
      const AffinePoint p1 = generic_center(e.web, rng);
      const AffinePoint p2 = generic_center(e.web, rng);
      const FamilyDegree fd = family_degree(e.web, p1, p2);
      if (fd.degenerate) continue;
      ++done;
      CHECK(fd.count == e.web.k() * e.web.k());
      CHECK(fd.cross_check);
      CHECK(fd.max_residual < 1e-9);
    }
    CHECK(done == 4);
  }
}

TEST_CASE("branches at the centre") {
  const CenterBranches b = branches_at_center(W("dx*dy"), 1, 2);
  CHECK(b.k_distinct);
  CHECK(b.match);
  CHECK(b.cone.cone == P("x*y"));

  const CenterBranches c = branches_at_center(W("dy^2 - x*dx^2"), 1, 0);
  CHECK(c.cone.cone == P("y^2 - x^2"));
  CHECK(c.k_distinct);
  CHECK(c.match);

  CHECK_THROWS_AS(branches_at_center(W("dy^2 - x*dx^2"), 0, 5), WebError);

  Rng rng(9);
  for (const auto& e : battery::all()) {
    CAPTURE(e.name);
    for (int s = 0; s < 3; ++s) {
      const AffinePoint p = generic_center(e.web, rng);
      if (polar_curve(e.web, p.a, p.b).whole_plane) continue;
      const CenterBranches br = branches_at_center(e.web, p.a, p.b);
      CHECK(br.k_distinct);
      CHECK(br.match);
      CHECK(br.cone.reconstruction_residual < 1e-9);
    }
  }
}

TEST_CASE("irrational tangent cone") {
  const TangentCone tc = tangent_cone(P("x^2 - 2*y^2 + x^3"), 0, 0);
  CHECK(tc.cone == P("x^2 - 2*y^2"));
  REQUIRE(tc.factors.size() == 2);
  CHECK(tc.reconstruction_residual < 1e-12);
}

TEST_CASE("curve components") {
  Rng rng(31);
  CHECK(curve_components(P("(x - 2)*(y - 3)"), rng).components == 2);
  CHECK(curve_components(P("(y + 1)^2 - x*(x - 1/2)^2"), rng).components == 1);
  CHECK(curve_components(P("x^2 + y^2 - 2*x - 3*y"), rng).components == 1);
  CHECK(curve_components(P("x^2 + y^2 - 1"), rng).components == 1);
  CHECK(curve_components(P("(x^2 + y^2 - 1)*(y - x^3)*(x + y)"), rng).components == 3);
  CHECK(curve_components(P("y^2 - 2*x^2"), rng).components == 2);
  const ComponentCount nonreduced = curve_components(P("(y - x^2)^2*(x + 1)"), rng);
  CHECK_FALSE(nonreduced.reduced);
  CHECK(nonreduced.components == 2);
}

TEST_CASE("web components") {
  Rng rng(32);
  CHECK(web_components(W("dx*dy"), rng).components == 2);
  CHECK(web_components(W("dy^2 - x*dx^2"), rng).components == 1);
  CHECK(web_components(W("(x*dy - y*dx)^2 - dx^2 - dy^2"), rng).components == 1);
  CHECK(web_components(W("(dy^2 - x*dx^2)*(x*dx + y*dy)"), rng).components == 2);
  CHECK(web_components(W("dx*dy*(x*dx + y*dy)"), rng).components == 3);
  CHECK(web_components(W("x*dx + y*dy"), rng).components == 1);
}

TEST_CASE("generic polar decomposes exactly when predicted") {
  Rng rng(33);
  for (const auto& e : battery::all()) {
    CAPTURE(e.name);
    const int d = web_degree(e.web, rng);
    const int parts = web_components(e.web, rng).components;
    const AffinePoint p = generic_center(e.web, rng);
    const PolarCurve pc = polar_curve(e.web, p.a, p.b);
    const int polar_parts = curve_components(pc.curve.defining, rng).components;
    const bool predicted_irreducible = parts == 1 && (d >= 1 || e.web.k() == 1);
    CHECK((polar_parts == 1) == predicted_irreducible);
  }
}
