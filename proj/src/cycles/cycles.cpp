#include "orbisev/cycles/cycles.hpp"

#include <algorithm>

#include "orbisev/error.hpp"
#include "orbisev/exactalg/ratfunc.hpp"
#include "orbisev/germ/germ.hpp"

namespace orbisev::cycles {

using exactalg::FieldElement;
using exactalg::KPoly;
using exactalg::Var;
using germ::GermCurve;
using puiseux::BranchEvaluator;

namespace {

BiPoly du(const BiPoly& p) { return exactalg::derivative(p, Var::U); }
BiPoly dv(const BiPoly& p) { return exactalg::derivative(p, Var::V); }

// (P, Q) ^ dH = P H_v - Q H_u.
BiPoly pairing_with(const FormSection& s, const BiPoly& h) { return s.p * dv(h) - s.q * du(h); }

bool is_unit(const BiPoly& p) { return !p.constant_term().is_zero(); }

// Every branch of A at the origin lies on f = 0.
bool locally_divides(const BiPoly& a, const BiPoly& f) {
  BiPoly d = exactalg::gcd(a, f);
  if (d.is_constant()) return false;
  return is_unit(exactalg::exact_div(a, d));
}

struct Primitive {
  BiPoly common;
  FormSection section;
};

Primitive primitive_part(const BiPoly& f) {
  Primitive out;
  BiPoly p = du(f), q = dv(f);
  out.common = exactalg::gcd(p, q);
  out.section.p = exactalg::exact_div(p, out.common);
  out.section.q = exactalg::exact_div(q, out.common);
  return out;
}

void check_germ_input(const BiPoly& p, const char* name) {
  if (p.is_constant())
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be nonconstant");
  if (!p.constant_term().is_zero())
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " must vanish at the origin");
}

int64_t finite(ExtNat x, const std::string& what) {
  if (x.is_infinite()) internal_error(what + " is infinite");
  return x.value();
}

using RF = exactalg::RatFunc<FieldElement>;
using RPoly = exactalg::Poly2<RF>;

// p + w q, or w p + q in the opposite chart.
RPoly chart_section(const BiPoly& p, const BiPoly& q, bool reversed) {
  RPoly out;
  const BiPoly& with_w = reversed ? p : q;
  const BiPoly& without = reversed ? q : p;
  for (const auto& [m, c] : without.terms()) out.add_term(m, RF(c));
  for (const auto& [m, c] : with_w.terms()) out.add_term(m, RF(KPoly::monomial(c, 1)));
  return out;
}

}  // namespace

FormSection FormSection::differential(const BiPoly& h) {
  FormSection s;
  s.p = du(h);
  s.q = dv(h);
  s.exact = true;
  s.potential = h;
  return s;
}

std::string lift_name(LiftSource s) { return s == LiftSource::F ? "f" : "g"; }

JacobianData wedge(const BiPoly& f, const BiPoly& g) {
  check_germ_input(f, "f");
  check_germ_input(g, "g");
  JacobianData out;
  out.field = exactalg::common_field(exactalg::coefficient_field(f), exactalg::coefficient_field(g));
  out.f = f;
  out.g = g;
  out.jacobian = exactalg::jacobian(f, g);
  if (out.jacobian.is_zero())
    throw Error(ErrorKind::DegenerateWedge, "df ^ dg vanishes identically");
  auto sq = exactalg::squarefree_decomposition(out.jacobian);
  out.unit = sq.unit;
  out.h = BiPoly(FieldElement(1));
  for (auto& [a, k] : sq.factors) {
    Component c;
    c.poly = a;
    c.multiplicity = k;
    c.divides_f = locally_divides(a, f);
    c.divides_g = locally_divides(a, g);
    out.h = out.h * a;
    out.components.push_back(std::move(c));
  }
  return out;
}

int64_t beta_profile(const PuiseuxBranch& branch, const FormSection& section) {
  BranchEvaluator ev(branch);
  ExtNat b = min(ev.order(section.p), ev.order(section.q));
  if (b.is_infinite())
    throw Error(ErrorKind::LiftUndefined, "section vanishes identically on the branch");
  return b.value();
}

namespace {

void check_proper(const BiPoly& f, const BiPoly& g) {
  if (exactalg::jacobian(f, g).is_zero())
    throw Error(ErrorKind::DegenerateWedge, "df ^ dg vanishes identically");
  Primitive pf = primitive_part(f), pg = primitive_part(g);
  // A common factor of the chart sections over K(w) cannot involve w unless
  // J = 0, so it must divide both c_f and c_g.
  BiPoly common = exactalg::gcd(pf.common, pg.common);
  if (!common.is_constant() && common.constant_term().is_zero())
    throw Error(ErrorKind::ImproperCycle,
                "L_df and L_dg share the horizontal component " + exactalg::to_string(common));
}

// Generic I_0 of the chart sections from specializations w = w0. With a
// shear that works over K(w), Res_y of the sheared sections has
// x-coefficients of w-degree <= D = deg F + deg G, and each leading
// y-coefficient is linear in w. So I_0 at w0 exceeds the generic value at
// most at D + 2 points, never falls below it, and the minimum over D + 3
// distinct points is exact.
ExtNat specialized_minimum(const BiPoly& f, const BiPoly& g, bool reversed) {
  const BiPoly fu = du(f), fv = dv(f), gu = du(g), gv = dv(g);
  auto section = [&](const BiPoly& p, const BiPoly& q, int w) {
    const BiPoly c = BiPoly(FieldElement(w));
    return reversed ? c * p + q : p + c * q;
  };
  const int D = std::max(fu.total_degree(), fv.total_degree()) +
                std::max(gu.total_degree(), gv.total_degree());
  ExtNat best = ExtNat::infinity();
  for (int i = 0; i < D + 3 && best != ExtNat(0); ++i) {
    const int w = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
    best = std::min(best, germ::fulton_intersection(section(fu, fv, w), section(gu, gv, w)));
  }
  return best;
}

}  // namespace

int64_t fiber_multiplicity_m0(const BiPoly& f, const BiPoly& g) {
  check_proper(f, g);
  ExtNat m[2] = {specialized_minimum(f, g, false), specialized_minimum(f, g, true)};
  if (m[0] != m[1])
    internal_error("fiber charts disagree on m0: " + m[0].to_string() + " vs " + m[1].to_string());
  return finite(m[0], "m0");
}

int64_t fiber_multiplicity_function_field(const BiPoly& f, const BiPoly& g) {
  check_proper(f, g);
  ExtNat m[2];
  for (int r = 0; r < 2; ++r)
    m[r] = germ::fulton_intersection_unchecked(chart_section(du(f), dv(f), r == 1),
                                              chart_section(du(g), dv(g), r == 1));
  if (m[0] != m[1])
    internal_error("fiber charts disagree on m0: " + m[0].to_string() + " vs " + m[1].to_string());
  return finite(m[0], "m0");
}

namespace {

// m0 is symmetric in (f, g); the swapped ledger reuses it.
CycleLedger decompose(const BiPoly& f, const BiPoly& g, const CycleOptions& options,
                      const int64_t* known_m0) {
  CycleLedger out;
  out.jacobian = wedge(f, g);
  const JacobianData& jd = out.jacobian;
  Primitive pf = primitive_part(f), pg = primitive_part(g);
  out.c_f = pf.common;
  out.c_g = pg.common;
  out.primitive_f = pf.section;
  out.primitive_g = pg.section;

  puiseux::BranchOptions opts;
  opts.order = options.order;
  opts.base_field = jd.field;
  opts.explicit_base = true;

  for (const Component& comp : jd.components)
    if (comp.divides_f && comp.divides_g)
      throw Error(ErrorKind::TypeZeroBranch,
                  "component " + exactalg::to_string(comp.poly) + " divides both f and g");

  for (size_t k = 0; k < jd.components.size(); ++k) {
    const Component& comp = jd.components[k];
    const BiPoly& a = comp.poly;
    const BiPoly a_u = du(a), a_v = dv(a);
    // Parts of A_k lying on f = 0 and on g = 0.
    const BiPoly in_f = exactalg::gcd(a, f), in_g = exactalg::gcd(a, g);
    const BiPoly out_f = exactalg::exact_div(a, in_f), out_g = exactalg::exact_div(a, in_g);
    auto on = [&](BranchEvaluator& ev, bool all, const BiPoly& part, const BiPoly& rest) {
      if (all) return true;
      if (part.is_constant() || is_unit(part)) return false;
      return ev.lies_on(part, rest);
    };

    int64_t pairing_sum = 0, beta_sum = 0;
    bool uniform = true;
    for (auto& b : puiseux::branches(GermCurve(a), opts)) {
      BranchEvaluator ev(b);
      BranchRecord rec;
      rec.component = static_cast<int>(k);
      const bool lies_f = on(ev, comp.divides_f, in_f, out_f);
      if (lies_f) {
        if (on(ev, comp.divides_g, in_g, out_g))
          throw Error(ErrorKind::TypeZeroBranch,
                      "component " + exactalg::to_string(a) + " divides both f and g");
        rec.lift = LiftSource::G;
        out.strict_hypothesis_violated = true;
      }
      const FormSection& s = lies_f ? out.primitive_g : out.primitive_f;
      ExtNat beta = min(ev.order(s.p), ev.order(s.q));
      if (beta.is_infinite()) internal_error("primitive section vanishes on a branch");
      rec.beta = beta.value();
      rec.gamma = finite(min(ev.order(a_u), ev.order(a_v)), "gamma");
      rec.pairing = finite(ev.order(pairing_with(s, jd.h)), "Jacobian pairing");
      rec.section_term =
          finite(ev.order(pairing_with(s, a)), "section pairing") - rec.beta - rec.gamma;
      if (rec.section_term < 0) internal_error("negative section term");
      rec.branch = ev.branch();
      const int conj = rec.branch.conjugacy_degree;
      pairing_sum += conj * rec.pairing;
      beta_sum += conj * rec.beta;
      if (!out.branches.empty() && out.branches.back().component == rec.component &&
          out.branches.back().lift != rec.lift)
        uniform = false;
      out.branches.push_back(std::move(rec));
    }
    // Branch-sum law against an independent intersection number.
    if (options.cross_check && uniform && !out.branches.empty() &&
        out.branches.back().component == static_cast<int>(k)) {
      const FormSection& s =
          out.branches.back().lift == LiftSource::F ? out.primitive_f : out.primitive_g;
      ExtNat direct = germ::intersection_multiplicity(pairing_with(s, jd.h), a);
      if (direct != ExtNat(pairing_sum))
        internal_error("branch sum " + std::to_string(pairing_sum) +
                       " disagrees with I_0 = " + direct.to_string() + " on " +
                       exactalg::to_string(a));
    }
    out.component_pairing.push_back(pairing_sum);
    out.component_beta.push_back(beta_sum);
  }
  out.m0 = known_m0 ? *known_m0 : fiber_multiplicity_m0(f, g);
  return out;
}

}  // namespace

CycleLedger cycle_decomposition(const BiPoly& f, const BiPoly& g, const CycleOptions& options) {
  return decompose(f, g, options, nullptr);
}

int64_t assemble_triple(const CycleLedger& ledger) {
  int64_t t = ledger.m0;
  const auto& comps = ledger.jacobian.components;
  for (size_t k = 0; k < comps.size(); ++k)
    t += comps[k].multiplicity * (ledger.component_pairing[k] - ledger.component_beta[k]);
  return t;
}

TripleResult evaluate_triple(const BiPoly& f, const BiPoly& g, const CycleOptions& options) {
  TripleResult r;
  r.ledger = cycle_decomposition(f, g, options);
  r.triple = assemble_triple(r.ledger);
  r.swapped_triple = assemble_triple(decompose(g, f, options, &r.ledger.m0));
  if (r.triple != r.swapped_triple)
    internal_error("triple product is not symmetric in f and g: " + std::to_string(r.triple) +
                   " vs " + std::to_string(r.swapped_triple));
  return r;
}

int64_t triple_product(const BiPoly& f, const BiPoly& g, const CycleOptions& options) {
  return evaluate_triple(f, g, options).triple;
}

ClaimIICheck claim_ii_check(const BiPoly& f, const BiPoly& g) {
  ClaimIICheck out;
  JacobianData jd = wedge(f, g);
  for (const auto& c : jd.components)
    if (c.divides_f) {
      out.applicable = false;
      out.detail = "component " + exactalg::to_string(c.poly) + " divides f";
      return out;
    }
  out.lhs = germ::intersection_multiplicity(exactalg::jacobian(f, jd.h), jd.jacobian);
  ExtNat rhs = 0;
  for (size_t i = 0; i < jd.components.size(); ++i) {
    const BiPoly& ai = jd.components[i].poly;
    ExtNat term = germ::intersection_multiplicity(exactalg::jacobian(f, ai), ai);
    for (size_t j = 0; j < jd.components.size(); ++j)
      if (j != i) term += germ::intersection_multiplicity(jd.components[j].poly, ai);
    rhs += static_cast<int64_t>(jd.components[i].multiplicity) * term;
  }
  out.rhs = rhs;
  out.holds = out.lhs == out.rhs;
  if (!out.holds) out.detail = "lhs " + out.lhs.to_string() + " != rhs " + out.rhs.to_string();
  return out;
}

Rational local_contribution(const BiPoly& f, const BiPoly& g, const groups::GroupData& group) {
  for (const auto* p : {&f, &g})
    if (!groups::is_invariant(*p, group))
      throw Error(ErrorKind::NotInvariant, exactalg::to_string(*p) + " is not invariant under " +
                                               group.label);
  return Rational(triple_product(f, g)) / Rational(group.order);
}

EqualityDiagnostics equality_case_diagnostics(const BiPoly& f, const BiPoly& g, int n) {
  EqualityDiagnostics out;
  out.n = n;
  JacobianData jd = wedge(f, g);
  if (jd.components.empty()) {
    out.multiplicity_equals_n = n == 1;
    out.criteria_met = true;
    out.note = "Jacobian is a unit at the origin";
    return out;
  }
  out.jacobian_multiplicity = germ::multiplicity_at_origin(jd.jacobian);
  out.multiplicity_equals_n = out.jacobian_multiplicity == n;
  std::vector<GermCurve> curves;
  for (const auto& c : jd.components) curves.emplace_back(c.poly);
  auto blow = germ::blowup_strict_transforms(curves);
  out.transforms_smooth = blow.all_smooth;
  out.transforms_disjoint = blow.pairwise_disjoint;
  out.criteria_met = out.multiplicity_equals_n && out.transforms_smooth && out.transforms_disjoint;
  if (!out.multiplicity_equals_n)
    out.note = "mult_0(J) = " + std::to_string(out.jacobian_multiplicity);
  else if (!out.transforms_smooth)
    out.note = "a strict transform is singular";
  else if (!out.transforms_disjoint)
    out.note = "strict transforms meet on the exceptional curve";
  return out;
}

}  // namespace orbisev::cycles
