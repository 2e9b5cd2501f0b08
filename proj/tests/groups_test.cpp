#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"
#include "orbisev/error.hpp"
#include "orbisev/exactalg/factor.hpp"
#include "orbisev/groups/groups.hpp"

using namespace orbisev::exactalg;
using namespace orbisev::groups;

namespace {

const BiPoly u = BiPoly::u();
const BiPoly v = BiPoly::v();

}  // namespace

TEST(Groups, OrdersAndClasses) {
  struct Row {
    const char* label;
    int order, classes;
  };
  for (const Row& r : {Row{"A0", 1, 1}, Row{"A1", 2, 2}, Row{"A2", 3, 3}, Row{"A4", 5, 5},
                       Row{"D4", 8, 5}, Row{"D5", 12, 6}, Row{"D6", 16, 7}, Row{"E6", 24, 7},
                       Row{"E7", 48, 8}, Row{"E8", 120, 9}}) {
    auto g = build_group(r.label);
    EXPECT_EQ(g->order, r.order) << r.label;
    EXPECT_EQ(g->classes, r.classes) << r.label;
  }
}

TEST(Groups, ClassEquationAndDeterminants) {
  for (const auto& label : catalog()) {
    auto g = build_group(label);
    int total = 0;
    for (int s : g->class_sizes) {
      EXPECT_EQ(g->order % s, 0) << label;
      total += s;
    }
    EXPECT_EQ(total, g->order) << label;
    for (const auto& m : g->elements) EXPECT_TRUE(m.det().is_one()) << label;
    // Closure: products of elements stay in the list.
    for (size_t i = 0; i < std::min<size_t>(g->elements.size(), 12); ++i)
      for (const auto& h : g->elements)
        EXPECT_NE(std::find(g->elements.begin(), g->elements.end(), g->elements[i] * h),
                  g->elements.end());
  }
}

TEST(Groups, InvariantsAreInvariant) {
  for (const auto& label : catalog()) {
    auto g = build_group(label);
    EXPECT_FALSE(g->invariants.empty());
    for (const auto& p : g->invariants) EXPECT_TRUE(is_invariant(p, *g)) << label;
  }
}

TEST(Groups, LabelsAndCache) {
  EXPECT_EQ(build_group("A_2"), build_group("A2"));
  EXPECT_EQ(build_group("A_{2}")->label, "A2");
  EXPECT_EQ(build_group("trivial")->order, 1);
  EXPECT_THROW(build_group("D3"), orbisev::Error);
  EXPECT_THROW(build_group("E9"), orbisev::Error);
  EXPECT_THROW(build_group("X1"), orbisev::Error);
  EXPECT_THROW(build_group("A100000"), orbisev::Error);
}

TEST(IsInvariant, Examples) {
  for (int n = 2; n <= 6; ++n) {
    auto g = build_group("A" + std::to_string(n - 1));
    EXPECT_TRUE(is_invariant(u * v, *g));
    EXPECT_TRUE(is_invariant((u + v.pow(n - 1)).pow(n), *g));
    EXPECT_FALSE(is_invariant(u + v, *g));
  }
  EXPECT_FALSE(is_invariant(u, *build_group("A1")));
  EXPECT_TRUE(is_invariant(u, *build_group("A0")));
}

TEST(IsInvariant, FieldHandling) {
  auto g = build_group("A3");  // over Q(i)
  auto qi = NumberField::cyclotomic(4, "i");
  FieldElement i = FieldElement::generator(qi);
  EXPECT_TRUE(is_invariant(u.pow(4) + BiPoly(i) * u * v, *g));
  // Q(zeta_3) polynomial against a Q(i) group: compared inside Q(zeta_12).
  auto k3 = NumberField::cyclotomic(3);
  EXPECT_TRUE(is_invariant(BiPoly(FieldElement::generator(k3)) * u * v, *g));
  EXPECT_FALSE(is_invariant(BiPoly(FieldElement::generator(k3)) * u * u, *g));
  auto odd = NumberField::create({Integer(-2), Integer(0), Integer(1)});  // Q(sqrt 2)
  EXPECT_THROW(is_invariant(BiPoly(FieldElement::generator(odd)) * u * v, *g), orbisev::Error);
}

TEST(IsInvariant, RandomInvariantCombinations) {
  testgen::Rng r(8);
  for (const char* label : {"A1", "A2", "D4", "E6"}) {
    auto g = build_group(label);
    for (int t = 0; t < 10; ++t) {
      BiPoly p;
      for (const auto& inv : g->invariants)
        if (inv.total_degree() <= 8) p += BiPoly(FieldElement(r.range(-3, 3))) * inv;
      EXPECT_TRUE(is_invariant(p, *g));
      if (g->order > 1) {
        EXPECT_FALSE(is_invariant(p + u, *g));
      }
    }
  }
}

TEST(ConjectureRhs, Values) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(conjecture_rhs(*build_group("A" + std::to_string(n - 1))), n * n - 1);
  EXPECT_EQ(conjecture_rhs(*build_group("E8")), 1079);
  for (const auto& label : catalog()) {
    auto g = build_group(label);
    EXPECT_GE(conjecture_rhs(*g), 0);
    EXPECT_EQ(conjecture_rhs(*g) == 0, g->order == 1);
  }
}

TEST(OrbifoldCorrection, Values) {
  EXPECT_EQ(orbifold_correction({"A1"}), Rational(3, 2));
  EXPECT_EQ(orbifold_correction({}), Rational(0));
  EXPECT_EQ(orbifold_correction({"A2", "A2"}), Rational(16, 3));
}

TEST(SeveriLedger, Examples) {
  auto a = severi_ledger(8, 16, {});
  EXPECT_EQ(a.chi, 2);
  EXPECT_EQ(a.deficit, Rational(0));
  EXPECT_EQ(a.kl_l2, Rational(0));
  EXPECT_TRUE(a.target_holds);

  auto b = severi_ledger(9, 15, {});
  EXPECT_EQ(b.deficit, Rational(1));
  EXPECT_EQ(b.kl_l2, Rational(3));

  auto c = severi_ledger(8, 16, {"A1"});
  EXPECT_EQ(c.e_orb, Rational(31, 2));

  EXPECT_THROW(severi_ledger(8, 15, {}), orbisev::Error);
}

TEST(SeveriLedger, NoetherConsistency) {
  testgen::Rng r(12);
  for (int t = 0; t < 50; ++t) {
    int k2 = r.range(-20, 60);
    int e = 12 * r.range(-10, 20) - k2;
    auto l = severi_ledger(k2, e, {});
    EXPECT_EQ(l.deficit * 3, Rational(2 * k2 - e));
    EXPECT_EQ(l.deficit * 3, l.kl_l2);
  }
}
