#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "battery.hpp"
#include "polarweb/foliation.hpp"
#include "polarweb/parse.hpp"

using namespace polarweb;

namespace {

MPoly P(const char* s) { return parse_poly(s); }
Foliation F(const char* a, const char* b) { return Foliation::from_field(P(a), P(b)); }
const AffinePoint O = AffinePoint::rational(0, 0);
AffinePoint pt(long a, long b) { return AffinePoint::rational(a, b); }

// (A, B) expressed in coordinates X = x - c y, Y = y.
Foliation sheared(const Foliation& f, const Rational& c) {
  const MPoly X = MPoly::var("x"), Y = MPoly::var("y");
  const std::map<std::string, MPoly> back{{"x", X + c * Y}};
  return Foliation::from_field(substitute(f.A - c * f.B, back), substitute(f.B, back));
}

}  // namespace

TEST_CASE("inflexion divisor examples") {
  const InflexionDivisor e1 = inflexion_divisor(F("1", "x^2"));
  CHECK_FALSE(e1.all_leaves_lines);
  CHECK(e1.raw == P("-2*x"));
  CHECK(e1.curve.defining == P("x"));
  CHECK(inflexion_divisor(F("1", "y")).curve.defining == P("y"));
  CHECK(inflexion_divisor(F("x", "y")).all_leaves_lines);
  CHECK(inflexion_divisor(F("1", "0")).all_leaves_lines);
  const InflexionDivisor e4 = inflexion_divisor(F("1", "x"));
  CHECK(e4.raw == P("-1"));
  CHECK(e4.curve.is_empty());
}

TEST_CASE("inflexion divisor commutes with shears") {
  Rng rng(51);
  for (const auto& e : battery::foliations()) {
    const InflexionDivisor ed = inflexion_divisor(e.foliation);
    if (ed.all_leaves_lines) continue;
    CAPTURE(e.name);
    for (int s = 0; s < 3; ++s) {
      const Rational c = rng.rational(9);
      const InflexionDivisor es = inflexion_divisor(sheared(e.foliation, c));
      REQUIRE_FALSE(es.all_leaves_lines);
      const MPoly back = substitute(es.curve.defining, {{"x", MPoly::var("x") - c * MPoly::var("y")}});
      CHECK(canonical(back) == ed.curve.defining);
    }
  }
}

TEST_CASE("classify singularity examples") {
  const SingularityClass radial = classify_singularity(F("x", "y"), O);
  CHECK(radial.quasi_radial);
  CHECK(radial.jet_order == 1);
  REQUIRE(radial.cofactor);
  CHECK(*radial.cofactor == P("1"));

  CHECK_FALSE(classify_singularity(F("x", "-y"), O).quasi_radial);
  // gcd(x^2, x y) = x is removed first.
  CHECK(classify_singularity(F("x^2", "x*y"), O).quasi_radial);

  const SingularityClass quad = classify_singularity(F("x^2", "y^2"), O);
  CHECK(quad.jet_order == 2);
  CHECK_FALSE(quad.quasi_radial);

  const SingularityClass deg = classify_singularity(F("x*(x + y) + y^3", "y*(x + y) + x^3"), O);
  CHECK(deg.quasi_radial);
  CHECK(deg.jet_order == 2);
  CHECK(*deg.cofactor == P("x + y"));

  const SingularityClass shifted = classify_singularity(F("x + 3 + (y - 2)^2", "y - 2"), pt(-3, 2));
  CHECK(shifted.quasi_radial);
  CHECK_FALSE(classify_singularity(F("x - 1 + y^2", "y - 2"), pt(-3, 2)).quasi_radial);

  CHECK_THROWS_AS(classify_singularity(F("x", "y"), pt(1, 0)), WebError);
}

TEST_CASE("classification at irrational points") {
  const Foliation qr = F("x^2 - 2", "2*x*y");
  const Foliation saddle = F("x^2 - 2", "y");
  for (double s : {1.0, -1.0}) {
    const AffinePoint q = AffinePoint::numeric(s * std::sqrt(2.0), 0);
    const SingularityClass a = classify_singularity(qr, q);
    CHECK(a.quasi_radial);
    CHECK_FALSE(a.exact);
    CHECK(a.criterion_residual < 1e-9);
    const SingularityClass b = classify_singularity(saddle, q);
    CHECK_FALSE(b.quasi_radial);
    CHECK(b.criterion_residual > 0.1);
  }
}

TEST_CASE("classification is invariant under scaling and linear changes") {
  Rng rng(52);
  for (const auto& e : battery::foliations()) {
    CAPTURE(e.name);
    const auto sing = foliation_singularities(e.foliation, false);
    const Foliation scaled = Foliation::from_field(Rational(-7, 3) * e.foliation.A, Rational(-7, 3) * e.foliation.B);
    const Rational c = rng.rational(9);
    const Foliation sh = sheared(e.foliation, c);
    for (const auto& s : sing) {
      CAPTURE(s.local.str());
      CHECK(classify_singularity(scaled, s.local).quasi_radial == s.cls.quasi_radial);
      const AffinePoint q2 = s.local.exact ? AffinePoint::rational(s.local.a - c * s.local.b, s.local.b)
                                           : AffinePoint::numeric(s.local.za - c.get_d() * s.local.zb, s.local.zb);
      const SingularityClass moved = classify_singularity(sh, q2);
      CHECK(moved.quasi_radial == s.cls.quasi_radial);
      CHECK(moved.jet_order == s.cls.jet_order);
    }
  }
}

TEST_CASE("tangent cone dichotomy examples") {
  const Foliation radial = F("x", "y");
  const ConeLine r = tangent_cone_line(radial, classify_singularity(radial, O), pt(1, 2));
  CHECK_FALSE(r.degenerate);
  CHECK(r.line_multiplicity == 1);
  CHECK(r.expected == 1);

  const Foliation saddle = F("x", "-y");
  const ConeLine s = tangent_cone_line(saddle, classify_singularity(saddle, O), pt(1, 2));
  CHECK_FALSE(s.degenerate);
  CHECK(s.line_multiplicity == 0);
  CHECK(s.expected == 0);

  const Foliation quad = F("x^2", "y^2");
  const ConeLine qd = tangent_cone_line(quad, classify_singularity(quad, O), pt(3, 5));
  CHECK(qd.cone_order == 2);
  CHECK(qd.line_multiplicity == 0);
  // Off the generic set: on the diagonal y A_2 - x B_2 = xy(x - y) vanishes.
  CHECK(tangent_cone_line(quad, classify_singularity(quad, O), pt(2, 2)).degenerate);

  const Foliation deg = F("x*(x + y) + y^3", "y*(x + y) + x^3");
  const SingularityClass dc = classify_singularity(deg, O);
  CHECK(tangent_cone_line(deg, dc, pt(1, 2)).line_multiplicity == 1);
  CHECK(tangent_cone_line(deg, dc, pt(1, -1)).degenerate);
}

TEST_CASE("tangent cone dichotomy on the battery") {
  Rng rng(53);
  for (const auto& e : battery::foliations()) {
    CAPTURE(e.name);
    for (const auto& s : foliation_singularities(e.foliation, false)) {
      int used = 0;
      for (int i = 0; i < 10 && used < 3; ++i) {
        const AffinePoint p = AffinePoint::rational(rng.rational(), rng.rational());
        const ConeLine cl = tangent_cone_line(e.foliation, s.cls, p);
        if (cl.degenerate) continue;
        ++used;
        CAPTURE(s.local.str());
        CHECK(cl.line_multiplicity == cl.expected);
      }
      CHECK(used == 3);
    }
  }
}

TEST_CASE("inflexion point examples") {
  CHECK(is_inflexion_point(P("y - x^3"), O).inflexion);
  CHECK_FALSE(is_inflexion_point(P("y - x^2"), O).inflexion);
  CHECK_FALSE(is_inflexion_point(P("x^2 + y^2 - 1"), pt(1, 0)).inflexion);
  CHECK_THROWS_AS(is_inflexion_point(P("y^2 - x^3"), O), WebError);
  const InflexionTest num = is_inflexion_point(P("y - x^3 + 2*x"), AffinePoint::numeric(0, 0));
  CHECK(num.inflexion);
  CHECK_FALSE(num.exact);
}

TEST_CASE("inflexion of the polar at its centre") {
  const Foliation f = F("1", "x^2");
  CHECK(polar_inflexion_at_center(f, O).inflexion);
  CHECK_FALSE(polar_inflexion_at_center(f, pt(1, 1)).inflexion);
  CHECK_FALSE(polar_inflexion_at_center(F("1", "x"), O).inflexion);
  // An irrational point of E = {x = 0}... and one off it.
  CHECK(polar_inflexion_at_center(f, AffinePoint::numeric(0, std::sqrt(2.0))).inflexion);
  CHECK_FALSE(polar_inflexion_at_center(f, AffinePoint::numeric(std::sqrt(2.0), 1)).inflexion);
}

TEST_CASE("points on curves") {
  Rng rng(54);
  const auto pts = points_on_curve(P("x^2 + y^2 - 25"), rng, 6);
  CHECK(pts.size() == 6);
  for (const auto& s : pts) CHECK(vanishes_at(P("x^2 + y^2 - 25"), s.point));
  // No rational points at all: numeric fallback.
  const auto irr = points_on_curve(P("x^2 + y^2 - 3"), rng, 3, 8);
  REQUIRE(irr.size() == 3);
  for (const auto& s : irr) {
    CHECK_FALSE(s.point.exact);
    CHECK(residual_at(P("x^2 + y^2 - 3"), s.point) < 1e-9);
  }
  for (const auto& e : battery::foliations()) {
    const InflexionDivisor ed = inflexion_divisor(e.foliation);
    if (ed.all_leaves_lines || ed.curve.is_empty()) continue;
    for (const auto& s : points_on_curve(ed.curve.defining, rng, 4)) CHECK(vanishes_at(ed.raw, s.point));
  }
}

TEST_CASE("singularities at infinity") {
  const auto horizontal = foliation_singularities(F("1", "0"));
  REQUIRE(horizontal.size() == 1);
  CHECK(horizontal[0].chart == Chart::x_one);
  CHECK(horizontal[0].cls.quasi_radial);
  CHECK(horizontal[0].point.str() == "[1:0:0]");

  CHECK(foliation_singularities(F("x", "y")).size() == 1);

  const auto saddle = foliation_singularities(F("x", "-y"));
  REQUIRE(saddle.size() == 3);
  for (const auto& s : saddle) CHECK_FALSE(s.cls.quasi_radial);

  // A generic foliation of degree d has d^2 + d + 1 singular points.
  for (const auto& e : battery::foliations()) {
    if (e.name.rfind("random", 0) != 0) continue;
    CAPTURE(e.name);
    Rng rng(55);
    const int d = web_degree(e.web, rng);
    CHECK(static_cast<int>(foliation_singularities(e.foliation).size()) == d * d + d + 1);
  }
}

TEST_CASE("class of curves") {
  Rng rng(56);
  CHECK(class_of_curve(P("x^2 + y^2 - 1"), rng).value == 2);
  CHECK(class_of_curve(P("y^2 - x^2*(x + 1)"), rng).value == 4);
  CHECK(class_of_curve(P("y^2 - x^3"), rng).value == 3);
  CHECK(class_of_curve(P("y^2 - x^3 + x"), rng).value == 6);
  CHECK(class_of_curve(P("x^4 + y^4 - 1"), rng).value == 12);
  // y = x^3: cusp at infinity, dual is the cuspidal cubic again.
  CHECK(class_of_curve(P("y - x^3"), rng).value == 3);
  CHECK(class_of_curve(P("x*y - 1"), rng).value == 2);
  const CurveClass c = class_of_curve(P("y^2 - x^2*(x + 1)"), rng, 3);
  CHECK(c.consistent);
  CHECK(c.values.size() == 3);
}
