#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"
#include "orbisev/error.hpp"
#include "orbisev/puiseux/puiseux.hpp"

using namespace orbisev::exactalg;
using namespace orbisev::puiseux;
using orbisev::germ::GermCurve;

namespace {

const BiPoly u = BiPoly::u();
const BiPoly v = BiPoly::v();
BiPoly c(int x) { return BiPoly(FieldElement(x)); }

KPoly mono(int coeff, int k) { return KPoly::monomial(FieldElement(coeff), k); }

BiPoly random_squarefree_germ(testgen::Rng& r, int deg, const FieldRef& k = nullptr) {
  while (true) {
    BiPoly p = testgen::random_poly(r, deg, r.range(2, 5), true, k);
    if (p.is_zero()) continue;
    BiPoly s = squarefree_part(p);
    if (s.constant_term().is_zero()) return s;
  }
}

int total_multiplicity(const std::vector<PuiseuxBranch>& bs) {
  int m = 0;
  for (const auto& b : bs) m += b.conjugacy_degree * b.multiplicity;
  return m;
}

ExtNat branch_sum(const std::vector<PuiseuxBranch>& bs, const BiPoly& h) {
  ExtNat s(0);
  for (const auto& b : bs) s = s + b.conjugacy_degree * branch_order(b, h);
  return s;
}

}  // namespace

TEST(NewtonPolygon, Examples) {
  auto cusp = newton_polygon(GermCurve(v * v - u.pow(3)));
  ASSERT_EQ(cusp.segments.size(), 1u);
  EXPECT_EQ(cusp.segments[0].start, (Monomial{0, 2}));
  EXPECT_EQ(cusp.segments[0].end, (Monomial{3, 0}));
  EXPECT_EQ(cusp.segments[0].steepness, Rational(2, 3));

  auto two = newton_polygon(GermCurve(v * v + u * v + u.pow(3)));
  ASSERT_EQ(two.segments.size(), 2u);
  EXPECT_EQ(two.segments[0].steepness, Rational(1));
  EXPECT_EQ(two.segments[1].steepness, Rational(1, 2));

  auto node = newton_polygon(GermCurve(u * v));
  ASSERT_EQ(node.segments.size(), 1u);
  EXPECT_EQ(node.segments[0].start, (Monomial{1, 1}));
  EXPECT_EQ(node.segments[0].end, (Monomial{1, 1}));
}

TEST(NewtonPolygon, SteepnessDecreasesOnRandomGerms) {
  testgen::Rng r(11);
  for (int i = 0; i < 200; ++i) {
    BiPoly f = testgen::random_poly(r, 7, 6, true);
    if (f.is_zero()) continue;
    auto np = newton_polygon(GermCurve(f));
    for (size_t k = 0; k + 1 < np.segments.size(); ++k) {
      EXPECT_GT(np.segments[k].steepness, np.segments[k + 1].steepness);
      EXPECT_EQ(np.segments[k].end, np.segments[k + 1].start);
    }
  }
}

TEST(Branches, Cusp) {
  auto bs = branches(GermCurve(v * v - u.pow(3)));
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].multiplicity, 2);
  EXPECT_EQ(bs[0].conjugacy_degree, 1);
  EXPECT_EQ(bs[0].u_series, mono(1, 2));
  EXPECT_EQ(bs[0].v_series, mono(1, 3));
}

TEST(Branches, Node) {
  auto bs = branches(GermCurve(u * u - v * v));
  ASSERT_EQ(bs.size(), 2u);
  std::vector<KPoly> vs;
  for (const auto& b : bs) {
    EXPECT_EQ(b.u_series, mono(1, 1));
    EXPECT_EQ(b.multiplicity, 1);
    vs.push_back(b.v_series);
  }
  EXPECT_TRUE((vs[0] == mono(1, 1) && vs[1] == mono(-1, 1)) ||
              (vs[0] == mono(-1, 1) && vs[1] == mono(1, 1)));
}

TEST(Branches, SmoothFamilyMember) {
  for (int n = 3; n <= 6; ++n) {
    auto bs = branches(GermCurve(u + v.pow(n - 1)));
    ASSERT_EQ(bs.size(), 1u);
    EXPECT_EQ(bs[0].multiplicity, 1);
    EXPECT_EQ(bs[0].u_series, mono(-1, n - 1));
    EXPECT_EQ(bs[0].v_series, mono(1, 1));
  }
}

TEST(Branches, AxesAndConjugates) {
  auto axes = branches(GermCurve(u * v));
  ASSERT_EQ(axes.size(), 2u);
  EXPECT_EQ(total_multiplicity(axes), 2);

  auto conj = branches(GermCurve(v * v - c(2) * u * u));
  ASSERT_EQ(conj.size(), 1u);
  EXPECT_EQ(conj[0].conjugacy_degree, 2);
  EXPECT_EQ(conj[0].field->degree(), 2);

  BranchOptions strict;
  strict.allow_extensions = false;
  EXPECT_THROW(branches(GermCurve(v * v - c(2) * u * u), strict), orbisev::ExtensionRequired);
  EXPECT_NO_THROW(branches(GermCurve(v * v - u * u), strict));

  EXPECT_THROW(branches(GermCurve(v * v * u)), orbisev::Error);
}

TEST(Branches, CyclotomicBase) {
  auto k = NumberField::cyclotomic(4, "i");
  // v^2 + u^2 splits over Q(i) into two branches.
  auto bs = branches(GermCurve(v * v + u * u), [&] {
    BranchOptions o;
    o.base_field = k;
    o.explicit_base = true;
    return o;
  }());
  ASSERT_EQ(bs.size(), 2u);
  for (const auto& b : bs) EXPECT_EQ(b.conjugacy_degree, 1);
  // Over Q the same germ is one conjugate pair.
  auto q = branches(GermCurve(v * v + u * u));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].conjugacy_degree, 2);
}

TEST(BranchOrder, Examples) {
  auto cusp = branches(GermCurve(v * v - u.pow(3)))[0];
  EXPECT_EQ(branch_order(cusp, u), 2);
  EXPECT_EQ(branch_order(cusp, v), 3);
  EXPECT_TRUE(branch_order(cusp, v * v - u.pow(3)).is_infinite());
  EXPECT_EQ(branch_order(cusp, v * v - u.pow(3) + u.pow(5)), 10);
  EXPECT_EQ(branch_order(cusp, u + c(1)), 0);

  // The truncation vanishes at the default precision; certification expands.
  std::vector<ExtNat> orders;
  for (const auto& b : branches(GermCurve(u * u - v * v)))
    orders.push_back(branch_order(b, u - v + u.pow(20)));
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<ExtNat>{1, 20}));
  // Vanishing on a component of a reducible germ.
  auto bs = branches(GermCurve((v - u * u) * (v + u * u)));
  int inf = 0;
  for (const auto& b : bs) inf += branch_order(b, v - u * u).is_infinite();
  EXPECT_EQ(inf, 1);
}

TEST(Branches, MultiplicityLawRandom) {
  testgen::Rng r(2024);
  for (int i = 0; i < 120; ++i) {
    BiPoly f = random_squarefree_germ(r, 6);
    GermCurve g(f);
    auto bs = branches(g);
    EXPECT_EQ(total_multiplicity(bs), g.multiplicity()) << to_string(f);
  }
}

TEST(Branches, SeriesSatisfyTheGerm) {
  testgen::Rng r(77);
  for (int i = 0; i < 60; ++i) {
    BiPoly f = random_squarefree_germ(r, 5);
    for (const auto& b : branches(GermCurve(f), 12)) {
      BranchEvaluator ev(b);
      EXPECT_TRUE(ev.compose(ev.to_branch_field(f)).is_zero()) << to_string(f);
    }
  }
}

TEST(Branches, RefinementIsMonotone) {
  testgen::Rng r(5);
  for (int i = 0; i < 40; ++i) {
    BiPoly f = random_squarefree_germ(r, 5);
    for (const auto& b : branches(GermCurve(f), 6)) {
      PuiseuxBranch fine = refine(b, 20);
      EXPECT_EQ(fine.u_series.truncated(7), b.u_series);
      EXPECT_EQ(fine.v_series.truncated(7), b.v_series);
    }
  }
}

TEST(BranchOrder, MasterLawRandom) {
  testgen::Rng r(31337);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    BiPoly f = random_squarefree_germ(r, 5);
    BiPoly h = testgen::random_poly(r, 5, r.range(1, 4), true);
    if (h.is_zero()) continue;
    if (r.coin(1, 6)) h = h * f;
    auto bs = branches(GermCurve(f));
    ExtNat expect = orbisev::germ::intersection_multiplicity(f, h);
    EXPECT_EQ(branch_sum(bs, h), expect) << to_string(f) << " ; " << to_string(h);
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(BranchOrder, MasterLawOverNumberField) {
  auto k = NumberField::cyclotomic(3);
  testgen::Rng r(99);
  for (int i = 0; i < 40; ++i) {
    BiPoly f = random_squarefree_germ(r, 4, k);
    BiPoly h = testgen::random_poly(r, 4, r.range(1, 3), true, k);
    if (h.is_zero()) continue;
    FieldRef kf = coefficient_field(f), kh = coefficient_field(h);
    if (kf && kh && !same_field(kf, kh)) continue;
    BranchOptions o;
    o.base_field = k;
    o.explicit_base = true;
    auto bs = branches(GermCurve(f), o);
    EXPECT_EQ(total_multiplicity(bs), GermCurve(f).multiplicity());
    EXPECT_EQ(branch_sum(bs, h), orbisev::germ::intersection_multiplicity(f, h))
        << to_string(f) << " ; " << to_string(h);
  }
}
