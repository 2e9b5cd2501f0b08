#include <gtest/gtest.h>

#include "gen.hpp"
#include "orbisev/cycles/cycles.hpp"
#include "orbisev/error.hpp"
#include "orbisev/germ/germ.hpp"

using namespace orbisev::exactalg;
using namespace orbisev::cycles;
using orbisev::ErrorKind;
using orbisev::germ::GermCurve;

namespace {

const BiPoly u = BiPoly::u();
const BiPoly v = BiPoly::v();
BiPoly c(int x) { return BiPoly(FieldElement(x)); }

BiPoly family_f(int n) { return (u + v.pow(n - 1)).pow(n); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const orbisev::Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// Combination of the monomials u^a v^b with a = b mod n: the invariants of
// the cyclic group of order n acting by (z, 1/z).
BiPoly random_cyclic_invariant(testgen::Rng& r, int n, int deg) {
  BiPoly p;
  const int terms = r.range(1, 4);
  for (int i = 0; i < terms;) {
    int d = r.range(1, deg), a = r.range(0, d), b = d - a;
    if ((a - b) % n != 0) continue;
    p.add_term({a, b}, FieldElement(r.range(-3, 3)));
    ++i;
  }
  return p;
}

// Generic value of I_0(f_u + w f_v, g_u + w g_v) as the minimum over
// specializations of w.
int64_t m0_by_specialization(const BiPoly& f, const BiPoly& g) {
  ExtNat best = ExtNat::infinity();
  for (int w : {2, -3, 5, 7, -11, 13}) {
    BiPoly sf = derivative(f, Var::U) + c(w) * derivative(f, Var::V);
    BiPoly sg = derivative(g, Var::U) + c(w) * derivative(g, Var::V);
    best = min(best, orbisev::germ::intersection_multiplicity(sf, sg));
  }
  return best.value();
}

}  // namespace

TEST(Wedge, Examples) {
  for (int n = 3; n <= 5; ++n) {
    JacobianData jd = wedge(family_f(n), u * v);
    BiPoly expect = c(n) * (u + v.pow(n - 1)).pow(n - 1) * (u - c(n - 1) * v.pow(n - 1));
    EXPECT_TRUE(jd.jacobian == expect || jd.jacobian == -expect);
    ASSERT_EQ(jd.components.size(), 2u);
    EXPECT_EQ(jd.components[0].poly, normalize_grlex(u - c(n - 1) * v.pow(n - 1)));
    EXPECT_EQ(jd.components[0].multiplicity, 1);
    EXPECT_EQ(jd.components[1].poly, normalize_grlex(u + v.pow(n - 1)));
    EXPECT_EQ(jd.components[1].multiplicity, n - 1);
    EXPECT_TRUE(jd.components[1].divides_f);
    EXPECT_FALSE(jd.components[0].divides_f);
  }
  for (int n = 2; n <= 5; ++n) {
    JacobianData jd = wedge(u * v, u.pow(n) + c(3) * v.pow(n));
    ASSERT_EQ(jd.components.size(), 1u);
    EXPECT_EQ(jd.components[0].multiplicity, 1);
    EXPECT_EQ(jd.h, normalize_grlex(u.pow(n) - c(3) * v.pow(n)));
  }
  JacobianData lines = wedge(u, v);
  EXPECT_EQ(lines.jacobian, c(1));
  EXPECT_TRUE(lines.components.empty());
  EXPECT_EQ(lines.unit, c(1));

  EXPECT_EQ(kind_of([] { wedge(u * u, u.pow(3)); }), ErrorKind::DegenerateWedge);
  EXPECT_EQ(kind_of([] { wedge(u + c(1), v); }), ErrorKind::InvalidArgument);
}

TEST(Beta, Examples) {
  FormSection df = FormSection::differential(u * u + v * v);
  auto bs = orbisev::puiseux::branches(GermCurve(u * u - v * v));
  ASSERT_EQ(bs.size(), 2u);
  FormSection du_only;
  du_only.p = c(1);
  for (const auto& b : bs) {
    EXPECT_EQ(beta_profile(b, df), 1);
    EXPECT_EQ(beta_profile(b, du_only), 0);
  }
  FormSection on_branch;
  on_branch.p = u * u - v * v;
  on_branch.q = (u * u - v * v) * v;
  EXPECT_EQ(kind_of([&] { beta_profile(bs[0], on_branch); }), ErrorKind::LiftUndefined);
}

TEST(FiberMultiplicity, Examples) {
  EXPECT_EQ(fiber_multiplicity_m0(u * u + v * v, u * v), 1);
  EXPECT_EQ(fiber_multiplicity_m0(u, v), 0);
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(fiber_multiplicity_m0(u.pow(n), v.pow(n)), (n - 1) * (n - 1));
    EXPECT_EQ(fiber_multiplicity_m0(u * v, u.pow(n) + c(2) * v.pow(n)), n - 1);
  }
  EXPECT_EQ(kind_of([] { fiber_multiplicity_m0(u * u * v, u * u * v * v); }),
            ErrorKind::ImproperCycle);
}

TEST(FiberMultiplicity, AgreesWithSpecialization) {
  testgen::Rng r(4242);
  int checked = 0;
  for (int i = 0; i < 120 && checked < 60; ++i) {
    BiPoly f = testgen::random_poly(r, 5, r.range(1, 4), true);
    BiPoly g = testgen::random_poly(r, 5, r.range(1, 4), true);
    if (f.is_zero() || g.is_zero() || jacobian(f, g).is_zero()) continue;
    int64_t m0;
    try {
      m0 = fiber_multiplicity_m0(f, g);
    } catch (const orbisev::Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::ImproperCycle);
      continue;
    }
    EXPECT_EQ(m0, m0_by_specialization(f, g)) << to_string(f) << " ; " << to_string(g);
    EXPECT_EQ(m0, fiber_multiplicity_function_field(f, g)) << to_string(f) << " ; " << to_string(g);
    ++checked;
  }
  EXPECT_GE(checked, 40);
}

TEST(CycleDecomposition, A1Pair) {
  CycleLedger l = cycle_decomposition(u * u + v * v, u * v);
  ASSERT_EQ(l.jacobian.components.size(), 1u);
  EXPECT_EQ(l.jacobian.components[0].multiplicity, 1);
  ASSERT_EQ(l.branches.size(), 2u);
  for (const auto& b : l.branches) {
    EXPECT_EQ(b.beta, 1);
    EXPECT_EQ(b.lift, LiftSource::F);
  }
  EXPECT_EQ(l.m0, 1);
  EXPECT_FALSE(l.strict_hypothesis_violated);
  EXPECT_EQ(assemble_triple(l), 3);
}

TEST(CycleDecomposition, PowerFamilyLifts) {
  CycleLedger l = cycle_decomposition(family_f(3), u * v);
  ASSERT_EQ(l.branches.size(), 2u);
  for (const auto& b : l.branches) {
    const Component& comp = l.jacobian.components[b.component];
    if (comp.poly == normalize_grlex(u + v * v)) {
      EXPECT_EQ(comp.multiplicity, 2);
      EXPECT_EQ(b.lift, LiftSource::G);
    } else {
      EXPECT_EQ(comp.poly, normalize_grlex(u - c(2) * v * v));
      EXPECT_EQ(b.lift, LiftSource::F);
    }
  }
  EXPECT_TRUE(l.strict_hypothesis_violated);
  EXPECT_EQ(l.c_f, (u + v * v).pow(2));
  EXPECT_EQ(l.m0, 2);
}

TEST(CycleDecomposition, TypeZero) {
  EXPECT_EQ(kind_of([] { cycle_decomposition(u + v, (u + v) * v); }), ErrorKind::TypeZeroBranch);
}

TEST(TripleProduct, PowerFamily) {
  for (int n = 2; n <= 6; ++n) {
    TripleResult t = evaluate_triple(family_f(n), u * v);
    EXPECT_EQ(t.triple, n * n - 1 + n * (n - 2)) << n;
    EXPECT_EQ(t.swapped_triple, t.triple);
  }
}

TEST(TripleProduct, A1PairAndNormalForm) {
  EXPECT_EQ(triple_product(u * u + v * v, u * v), 3);
  // Normal form of the equality case: n^2 - 1.
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(triple_product(u * v, u.pow(n) + c(2) * v.pow(n)), n * n - 1);
  EXPECT_EQ(triple_product(u, v), 0);
}

TEST(ClaimII, Examples) {
  auto a1 = claim_ii_check(u * u + v * v, u * v);
  EXPECT_TRUE(a1.applicable);
  EXPECT_TRUE(a1.holds);
  EXPECT_EQ(a1.lhs, 4);
  EXPECT_TRUE(claim_ii_check(u.pow(3) + v.pow(3), u * v).holds);
  auto lines = claim_ii_check(u, v);
  EXPECT_TRUE(lines.holds);
  EXPECT_EQ(lines.lhs, 0);
  EXPECT_FALSE(claim_ii_check(family_f(3), u * v).applicable);
}

TEST(LocalContribution, Examples) {
  auto a2 = orbisev::groups::build_group("A2");
  auto a1 = orbisev::groups::build_group("A1");
  auto triv = orbisev::groups::build_group("A0");
  EXPECT_EQ(local_contribution(family_f(3), u * v, *a2), Rational(11, 3));
  EXPECT_EQ(local_contribution(u * u + v * v, u * v, *a1), Rational(3, 2));
  EXPECT_EQ(local_contribution(u, v, *triv), Rational(0));
  EXPECT_EQ(kind_of([&] { local_contribution(u + v, u * v, *a1); }), ErrorKind::NotInvariant);
}

TEST(EqualityCase, Examples) {
  auto a1 = equality_case_diagnostics(u * u + v * v, u * v, 2);
  EXPECT_EQ(a1.jacobian_multiplicity, 2);
  EXPECT_TRUE(a1.criteria_met);
  auto fam = equality_case_diagnostics(family_f(3), u * v, 3);
  EXPECT_FALSE(fam.criteria_met);
  EXPECT_FALSE(fam.transforms_disjoint);
  EXPECT_TRUE(equality_case_diagnostics(u, v, 1).criteria_met);
}

// Random invariant pairs of A_{n-1}: symmetry, the splitting identity, the per-branch
// section terms (checked inside the ledger) and the reduced-Jacobian bound.
TEST(Properties, CyclicInvariantPairs) {
  testgen::Rng r(8675309);
  for (int n = 2; n <= 4; ++n) {
    int done = 0, reduced = 0;
    for (int i = 0; i < 400 && done < 30; ++i) {
      BiPoly f = random_cyclic_invariant(r, n, 6), g = random_cyclic_invariant(r, n, 6);
      CycleOptions opts;
      opts.cross_check = i % 4 == 0;
      if (f.is_zero() || g.is_zero() || f.is_constant() || g.is_constant()) continue;
      if (jacobian(f, g).is_zero()) continue;
      TripleResult t;
      try {
        t = evaluate_triple(f, g, opts);
      } catch (const orbisev::Error& e) {
        ASSERT_TRUE(e.kind() == ErrorKind::TypeZeroBranch) << e.what();
        continue;
      }
      ++done;
      EXPECT_EQ(t.triple, t.swapped_triple);
      bool is_reduced = true;
      for (const auto& comp : t.ledger.jacobian.components) is_reduced &= comp.multiplicity == 1;
      if (is_reduced) {
        ++reduced;
        EXPECT_GE(t.triple, n * n - 1) << to_string(f) << " ; " << to_string(g);
      }
      auto c2 = claim_ii_check(f, g);
      if (c2.applicable) {
        EXPECT_TRUE(c2.holds) << c2.detail;
      }
      for (const auto& b : t.ledger.branches) {
        EXPECT_GE(b.beta, 0);
        EXPECT_GE(b.gamma, 0);
        EXPECT_GE(b.section_term, 0);
      }
    }
    EXPECT_GE(done, 25) << n;
    EXPECT_GT(reduced, 0) << n;
  }
}
