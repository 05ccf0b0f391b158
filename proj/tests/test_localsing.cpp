#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "battery.hpp"
#include "polarweb/localsing.hpp"
#include "polarweb/parse.hpp"

using namespace polarweb;

namespace {

MPoly P(const char* s) { return parse_poly(s); }
const AffinePoint O = AffinePoint::rational(0, 0);
const double kSqrt2 = std::sqrt(2.0);

GermFingerprint fp(const char* f, const AffinePoint& q = O) { return fingerprint(P(f), q); }

}  // namespace

TEST_CASE("local multiplicity") {
  CHECK(local_multiplicity(P("y^2 - x^3"), O) == 2);
  CHECK(local_multiplicity(P("x*y"), O) == 2);
  CHECK(local_multiplicity(P("y - x^2"), O) == 1);
  CHECK(local_multiplicity(P("(x - 1)^3 + (y - 2)^4"), AffinePoint::rational(1, 2)) == 3);
  CHECK(local_multiplicity(P("x + 1"), O) == 0);
}

TEST_CASE("intersection multiplicity examples") {
  CHECK(intersection_multiplicity(P("y"), P("x"), O) == 1);
  CHECK(intersection_multiplicity(P("y"), P("y - x^2"), O) == 2);
  CHECK(intersection_multiplicity(P("y^2 - x^3"), P("y"), O) == 3);
  CHECK(intersection_multiplicity(P("y^2 - x^3"), P("x"), O) == 2);
  CHECK(intersection_multiplicity(P("y - 1"), P("x"), O) == 0);
  // Other intersections on the same vertical line must not be counted.
  CHECK(intersection_multiplicity(P("x"), P("y*(y - 1)*(y + 2)"), O) == 1);
  CHECK(intersection_multiplicity(P("y^2 - x^3"), P("y^2 + x^3 - 2*x^2"), O) == 4);
  CHECK_THROWS_AS(intersection_multiplicity(P("x*y"), P("x*(y - 1)"), O), LocalError);
  // A common component away from the point is harmless.
  CHECK(intersection_multiplicity(P("(x - 5)*y"), P("(x - 5)*(y - x^2)"), O) == 2);
}

TEST_CASE("intersection multiplicity at irrational points") {
  const AffinePoint q = AffinePoint::numeric(kSqrt2, 0);
  CHECK(intersection_multiplicity(P("x^2 - 2"), P("y"), q) == 1);
  CHECK(intersection_multiplicity(P("y - (x^2 - 2)^2"), P("y"), q) == 2);
  CHECK(intersection_multiplicity(P("y^2 - (x^2 - 2)^3"), P("y"), q) == 3);
  CHECK(intersection_multiplicity(P("y + 1 - x^2"), P("y - 1 + x^2"), AffinePoint::numeric(1, 0)) == 1);
}

TEST_CASE("intersection multiplicity is symmetric and additive") {
  Rng rng(41);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    // Random germs through the origin: no constant term.
    auto germ = [&rng]() {
      MPoly f;
      while (f.is_zero() || f.constant_term() != 0) {
        f = battery::random_poly(rng, 2, 3);
        f -= MPoly(f.constant_term());
      }
      return f;
    };
    const MPoly f = germ(), g = germ(), h = germ();
    if (!gcd(f, g).is_constant() || !gcd(f, h).is_constant()) continue;
    const int fg = intersection_multiplicity(f, g, O);
    CHECK(fg == intersection_multiplicity(g, f, O));
    CHECK(fg >= 1);
    CHECK(intersection_multiplicity(f, g * h, O) == fg + intersection_multiplicity(f, h, O));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("milnor numbers") {
  CHECK(milnor_number(P("y^2 - x^3"), O) == 2);
  CHECK(milnor_number(P("x*y"), O) == 1);
  CHECK(milnor_number(P("y^2 - x^4"), O) == 3);
  CHECK(milnor_number(P("y^3 - x^4"), O) == 6);
  CHECK(milnor_number(P("y - x^2"), O) == 0);
  CHECK(milnor_number(P("x^2 - 1"), AffinePoint::rational(1, 0)) == 0);
}

TEST_CASE("blow-up examples") {
  const auto cusp = blow_up_germ(Germ::at(P("y^2 - x^3"), O));
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].intersection == 2);
  CHECK(cusp[0].strict.terms == Germ::at(P("y^2 - x"), O).terms);

  const auto node = blow_up_germ(Germ::at(P("x*y"), O));
  REQUIRE(node.size() == 2);
  for (const auto& p : node) {
    CHECK(p.intersection == 1);
    CHECK(p.strict.multiplicity() == 1);
  }

  const auto smooth = blow_up_germ(Germ::at(P("y - x^2"), O));
  REQUIRE(smooth.size() == 1);
  CHECK(smooth[0].intersection == 1);
  CHECK(smooth[0].strict.multiplicity() == 1);
}

TEST_CASE("blow-up meets the exceptional line m times") {
  for (const char* f : {"y^2 - x^3", "x*y*(x - y)", "y^3 - x^5 + x^2*y^2", "(y^2 - 2*x^2)^2 + x^5", "x^4 + y^5"}) {
    CAPTURE(f);
    const Germ g = Germ::at(P(f), O);
    int total = 0;
    for (const auto& p : blow_up_germ(g)) {
      total += p.intersection;
      CHECK(p.strict.multiplicity() <= p.intersection);
    }
    CHECK(total == g.multiplicity());
  }
}

TEST_CASE("fingerprints of classical singularities") {
  const GermFingerprint cusp = fp("y^2 - x^3");
  CHECK(cusp.m == 2);
  CHECK(cusp.mu == 2);
  CHECK(cusp.r == 1);
  CHECK(cusp.delta == 1);
  CHECK(cusp.mult_sequence == std::vector<int>{2, 1, 1});
  CHECK(cusp.cone_pattern == std::vector<int>{2});
  CHECK(cusp.exact);

  const GermFingerprint node = fp("x*y");
  CHECK(node.mu == 1);
  CHECK(node.r == 2);
  CHECK(node.delta == 1);
  CHECK(node.mult_sequence == std::vector<int>{2});
  CHECK(node.cone_pattern == std::vector<int>{1, 1});

  const GermFingerprint tac = fp("y^2 - x^4");
  CHECK(tac.mu == 3);
  CHECK(tac.r == 2);
  CHECK(tac.delta == 2);
  CHECK(tac.mult_sequence == std::vector<int>{2, 2});
  CHECK(tac.cone_pattern == std::vector<int>{2});

  const GermFingerprint smooth = fp("y - x^2");
  CHECK(smooth.m == 1);
  CHECK(smooth.mu == 0);
  CHECK(smooth.r == 1);
  CHECK(smooth.delta == 0);
  CHECK(smooth.mult_sequence == std::vector<int>{1});

  CHECK(fp("y^3 - x^4").mult_sequence == std::vector<int>{3, 1, 1, 1});
  CHECK(fp("y^3 - x^5").mult_sequence == std::vector<int>{3, 2, 1, 1});
  CHECK(fp("y^2 - x^5").mult_sequence == std::vector<int>{2, 2, 1, 1});
  const GermFingerprint d4 = fp("x*y*(x - y)");
  CHECK(d4.mult_sequence == std::vector<int>{3});
  CHECK(d4.r == 3);
  CHECK(d4.mu == 4);
  CHECK(fp("(y^2 - x^3)*(y - x^2)").r == 2);
}

TEST_CASE("fingerprints with irrational data") {
  const GermFingerprint cone = fp("x^2 - 2*y^2 + x^3");
  CHECK(cone.mult_sequence == std::vector<int>{2});
  CHECK(cone.r == 2);
  CHECK(cone.exact);

  // Two irrational tangents, each with a tangency of order two.
  const GermFingerprint twin = fp("(y^2 - 2*x^2)^2 + x^5");
  CHECK(twin.m == 4);
  CHECK(twin.delta == fp("(y^2 - 4*x^2)^2 + x^5").delta);
  CHECK(twin.mult_sequence == fp("(y^2 - 4*x^2)^2 + x^5").mult_sequence);
  CHECK_FALSE(twin.exact);

  const AffinePoint q = AffinePoint::numeric(kSqrt2, 0);
  const GermFingerprint node = fp("(x^2 - 2)^2 + y^2", q);
  CHECK(node.mult_sequence == std::vector<int>{2});
  CHECK(node.r == 2);
  CHECK_FALSE(node.exact);
  const GermFingerprint cusp = fp("(x^2 - 2)^3 - y^2", q);
  CHECK(cusp == fp("y^2 - x^3"));
  const GermFingerprint tac = fp("y^2 - (x^2 - 2)^4", q);
  CHECK(tac == fp("y^2 - x^4"));
}

TEST_CASE("delta from the sequence matches Milnor's formula") {
  Rng rng(42);
  int done = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Random germs with a given low-order part plus random higher terms.
    const char* lows[] = {"y^2 - x^3", "y^2 - x^4", "y^3 - x^4", "x*y*(x + y)", "y^2 - x^5", "(y - x)^2 - x^3"};
    MPoly f = P(lows[trial % 6]);
    for (int i = 0; i <= 6; ++i) {
      for (int j = 0; i + j <= 6; ++j) {
        if (i + j >= 5 && rng.uniform_int(0, 3) == 0) f += MPoly::term("x", i) * MPoly::term("y", j, rng.rational(5));
      }
    }
    if (squarefree_part(f).total_degree() != f.total_degree()) continue;
    const GermFingerprint g = fingerprint(f, O);
    CHECK(g.mu == 2 * g.delta - g.r + 1);
    CHECK(g.mult_sequence.front() == g.m);
    ++done;
  }
  CHECK(done > 30);
}

TEST_CASE("genus") {
  Rng rng(43);
  CHECK(genus_of_curve(P("x^2 + y^2 - 1"), GenusMode::projective, rng).genus == 0);
  CHECK(genus_of_curve(P("y^2 - x^2*(x + 1)"), GenusMode::projective, rng).genus == 0);
  CHECK(genus_of_curve(P("x^4 + y^4 - 1"), GenusMode::projective, rng).genus == 3);
  CHECK(genus_of_curve(P("y^2 - x^3 + x"), GenusMode::projective, rng).genus == 1);
  CHECK(genus_of_curve(P("y^2 - x^3"), GenusMode::projective, rng).genus == 0);

  // y = x^3 has a cusp at [0:1:0] only.
  const GenusResult affine = genus_of_curve(P("y - x^3"), GenusMode::affine, rng);
  CHECK(affine.genus == 1);
  CHECK(affine.points.empty());
  const GenusResult proj = genus_of_curve(P("y - x^3"), GenusMode::projective, rng);
  CHECK(proj.genus == 0);
  REQUIRE(proj.points.size() == 1);
  CHECK(proj.points[0].first.chart == Chart::y_one);
  CHECK(proj.points[0].second == fp("y^2 - x^3"));

  // Nodes at the origin, [1:0:0] and [0:1:0].
  const GenusResult cross = genus_of_curve(P("x^2*y^2 - x^2 - y^2"), GenusMode::projective, rng);
  CHECK(cross.genus == 0);
  CHECK(cross.points.size() == 3);
  CHECK(genus_of_curve(P("x^2*y^2 - x^2 - y^2"), GenusMode::affine, rng).genus == 2);
  CHECK_THROWS_AS(genus_of_curve(P("x*y"), GenusMode::projective, rng), LocalError);
  CHECK_THROWS_AS(genus_of_curve(P("(y - x^2)^2"), GenusMode::projective, rng), LocalError);
}

TEST_CASE("points at infinity") {
  const MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z");
  const MPoly F = y * z * z - x * x * x;
  CHECK(homogenize(P("y - x^3")) == F);
  CHECK(chart_poly(F, Chart::x_one) == P("x*y^2 - 1"));
  CHECK(chart_poly(F, Chart::y_one) == P("y^2 - x^3"));
  CHECK(chart_poly(F, Chart::affine) == P("y - x^3"));

  // x^2 y^2 = x^2 + y^2 (the cross curve) has nodes at [1:0:0] and [0:1:0].
  const auto inf = singular_points_at_infinity(P("x^2*y^2 - x^2 - y^2"));
  REQUIRE(inf.size() == 2);
  CHECK(inf[0].chart == Chart::x_one);
  CHECK(inf[1].chart == Chart::y_one);
  CHECK(projective_singular_points(P("x^2*y^2 - x^2 - y^2")).size() == 3);
}

TEST_CASE("smooth curves have the expected genus") {
  Rng rng(44);
  for (int n = 2; n <= 4; ++n) {
    for (int s = 0; s < 3; ++s) {
      const MPoly f = battery::random_poly(rng, n, 9);
      if (f.total_degree() != n || !projective_singular_points(f).empty()) continue;
      CAPTURE(f.str());
      CHECK(genus_of_curve(f, GenusMode::projective, rng).genus == (n - 1) * (n - 2) / 2);
    }
  }
}
