#include <gtest/gtest.h>

#include "gen.hpp"
#include "orbisev/germ/germ.hpp"

using namespace orbisev::exactalg;
using namespace orbisev::germ;

namespace {

const BiPoly u = BiPoly::u();
const BiPoly v = BiPoly::v();
BiPoly c(int x) { return BiPoly(FieldElement(x)); }

ExtNat oracle(const BiPoly& f, const BiPoly& g, int cap = 48) {
  auto q = quotient_dimension_oracle(f, g, cap);
  return q.overflow ? ExtNat::infinity() : ExtNat(q.dimension);
}

// Random germ through the origin of total degree <= deg.
BiPoly random_germ(testgen::Rng& r, int deg) {
  BiPoly p;
  while (p.is_zero()) p = testgen::random_poly(r, deg, r.range(1, 4), true);
  return p;
}

}  // namespace

TEST(Intersection, Examples) {
  EXPECT_EQ(intersection_multiplicity(u, v), 1);
  EXPECT_EQ(oracle(v * v - u.pow(3), v), 3);
  EXPECT_EQ(intersection_multiplicity(v * v - u.pow(3), v), 3);
  EXPECT_EQ(oracle(u * v, u * u - v * v), 4);
  EXPECT_EQ(intersection_multiplicity(u * v, u * u - v * v), 4);
  EXPECT_TRUE(intersection_multiplicity(u + v, (u + v) * v).is_infinite());
  EXPECT_EQ(intersection_multiplicity(u + c(1), v), 0);
}

TEST(Intersection, GermCurveRejectsUnits) {
  EXPECT_THROW(GermCurve(u + c(1)), orbisev::Error);
  EXPECT_EQ(GermCurve(v * v - u.pow(3)).multiplicity(), 2);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity_at_origin(u * u - v * v), 2);
  EXPECT_EQ(multiplicity_at_origin(v * v - u.pow(3)), 2);
  // Jacobian of the A1 pair (u^2 + v^2, uv).
  BiPoly j = jacobian(u * u + v * v, u * v);
  EXPECT_EQ(j, c(2) * (u * u - v * v));
  EXPECT_EQ(multiplicity_at_origin(j), 2);
}

TEST(QuotientOracle, Examples) {
  EXPECT_EQ(quotient_dimension_oracle(u, v, 4).dimension, 1);
  EXPECT_FALSE(quotient_dimension_oracle(u, v, 4).overflow);
  auto q = quotient_dimension_oracle(v * v - u.pow(3), v * v + u.pow(3), 8);
  EXPECT_FALSE(q.overflow);
  EXPECT_EQ(q.dimension, 6);
  for (int cap : {4, 8, 16})
    EXPECT_TRUE(quotient_dimension_oracle(u + v, (u + v) * v, cap).overflow);
}

TEST(QuotientOracle, OverflowMeansRaiseTheCap) {
  // I = 10 needs truncation past degree 10.
  auto low = quotient_dimension_oracle(v - u.pow(10), v, 6);
  EXPECT_TRUE(low.overflow);
  auto high = quotient_dimension_oracle(v - u.pow(10), v, 16);
  EXPECT_FALSE(high.overflow);
  EXPECT_EQ(high.dimension, 10);
}

TEST(Intersection, ThreeWayAgreementRandom) {
  testgen::Rng rng(1234);
  int finite = 0;
  for (int i = 0; i < 400 && finite < 120; ++i) {
    BiPoly f = random_germ(rng, 5), g = random_germ(rng, 5);
    ExtNat a = fulton_intersection(f, g);
    ExtNat b = resultant_intersection(f, g);
    EXPECT_EQ(a, b) << to_string(f) << " | " << to_string(g);
    if (a.is_finite()) {
      ++finite;
      EXPECT_EQ(oracle(f, g, 64), a) << to_string(f) << " | " << to_string(g);
    }
  }
  EXPECT_EQ(finite, 120);
}

TEST(Intersection, Symmetry) {
  testgen::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    BiPoly f = random_germ(rng, 4), g = random_germ(rng, 4);
    EXPECT_EQ(intersection_multiplicity(f, g), intersection_multiplicity(g, f));
  }
}

TEST(Intersection, Additivity) {
  testgen::Rng rng(7);
  for (int i = 0; i < 80; ++i) {
    BiPoly f = random_germ(rng, 3), g = random_germ(rng, 3), h = random_germ(rng, 3);
    ExtNat fg = intersection_multiplicity(f, g), fh = intersection_multiplicity(f, h);
    if (fg.is_infinite() || fh.is_infinite()) continue;
    EXPECT_EQ(intersection_multiplicity(f, g * h), fg + fh);
  }
}

TEST(Intersection, LowerBoundAndTangents) {
  testgen::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    BiPoly f = random_germ(rng, 4), g = random_germ(rng, 4);
    ExtNat im = intersection_multiplicity(f, g);
    if (im.is_infinite()) continue;
    int64_t bound = int64_t(multiplicity_at_origin(f)) * multiplicity_at_origin(g);
    EXPECT_GE(im.value(), bound);
    bool common_tangent = gcd(f.initial_form(), g.initial_form()).total_degree() > 0;
    EXPECT_EQ(im.value() == bound, !common_tangent) << to_string(f) << " | " << to_string(g);
  }
}

TEST(Intersection, InvariantUnderLinearChange) {
  testgen::Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    BiPoly f = random_germ(rng, 4), g = random_germ(rng, 4);
    int a = rng.range(-3, 3), b = rng.range(-3, 3);
    // (u, v) -> (u + a v, b u + (a b + 1) v) has determinant 1.
    BiPoly x = u + c(a) * v, y = c(b) * u + c(a * b + 1) * v;
    EXPECT_EQ(intersection_multiplicity(substitute(f, x, y), substitute(g, x, y)),
              intersection_multiplicity(f, g));
  }
}

TEST(Intersection, OverNumberField) {
  FieldRef k = NumberField::cyclotomic(4);
  BiPoly i(FieldElement::generator(k));
  // u^2 + v^2 = (u + i v)(u - i v) meets u + i v along a component.
  EXPECT_TRUE(intersection_multiplicity(u * u + v * v, u + i * v).is_infinite());
  EXPECT_EQ(intersection_multiplicity(u * u + v * v, u - v), 2);
  EXPECT_EQ(intersection_multiplicity(v - i * u * u, v - u * u), 2);
  EXPECT_EQ(oracle(v - i * u * u, v - u * u), 2);
}

TEST(Blowup, CuspHasSmoothStrictTransform) {
  auto r = blowup_strict_transforms({GermCurve(v * v - u.pow(3))});
  ASSERT_EQ(r.curves.size(), 1u);
  EXPECT_EQ(r.curves[0].exceptional_multiplicity, 2);
  // Direct substitution v = u v': (u^2 v'^2 - u^3) / u^2.
  EXPECT_EQ(r.curves[0].chart_u, v * v - u);
  EXPECT_TRUE(r.curves[0].smooth);
}

TEST(Blowup, NodeSplitsIntoTwoPoints) {
  auto r = blowup_strict_transforms({GermCurve(u * u - v * v)});
  const auto& st = r.curves[0];
  EXPECT_EQ(st.exceptional_multiplicity, 2);
  // (u^2 - u^2 v'^2) / u^2 = 1 - v'^2.
  EXPECT_EQ(st.chart_u, c(1) - v * v);
  ASSERT_EQ(st.points.size(), 2u);
  for (const auto& p : st.points) {
    EXPECT_EQ(p.minpoly.degree(), 1);
    EXPECT_TRUE(p.smooth);
  }
  EXPECT_TRUE(r.all_smooth);
}

TEST(Blowup, LineAndDisjointness) {
  auto r = blowup_strict_transforms({GermCurve(u)});
  EXPECT_EQ(r.curves[0].exceptional_multiplicity, 1);
  EXPECT_TRUE(r.all_smooth);
  auto two = blowup_strict_transforms({GermCurve(u - v), GermCurve(u + v)});
  EXPECT_TRUE(two.pairwise_disjoint);
  auto tangent = blowup_strict_transforms({GermCurve(v), GermCurve(v - u * u)});
  EXPECT_FALSE(tangent.pairwise_disjoint);
  // Tacnode v^2 - u^4 stays singular after one blowup.
  auto tac = blowup_strict_transforms({GermCurve(v * v - u.pow(4))});
  EXPECT_FALSE(tac.all_smooth);
  // Point in the v-chart only: u^2 - v^3 is tangent to u = 0.
  auto vc = blowup_strict_transforms({GermCurve(u * u - v.pow(3))});
  ASSERT_EQ(vc.curves[0].points.size(), 1u);
  EXPECT_EQ(vc.curves[0].points[0].chart, Var::V);
  EXPECT_TRUE(vc.curves[0].smooth);
}
