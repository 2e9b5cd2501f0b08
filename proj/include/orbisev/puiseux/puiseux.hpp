#pragma once

#include <memory>
#include <vector>

#include "orbisev/exactalg/bipoly.hpp"
#include "orbisev/germ/germ.hpp"

namespace orbisev::puiseux {

using exactalg::BiPoly;
using exactalg::ExtNat;
using exactalg::FieldElement;
using exactalg::FieldRef;
using exactalg::KPoly;
using exactalg::Monomial;
using exactalg::Rational;

struct NewtonSegment {
  Monomial start;  // upper-left endpoint (smaller u-exponent)
  Monomial end;    // lower-right endpoint
  // (v-drop)/(u-advance); strictly decreasing from left to right.
  Rational steepness;
};

// Compact faces of the Newton diagram of F at the origin. A diagram that is a
// single vertex (e.g. uv) is reported as one zero-length segment from that
// vertex to itself with steepness 0.
struct NewtonPolygon {
  std::vector<NewtonSegment> segments;
};

NewtonPolygon newton_polygon(const germ::GermCurve& f);

// One branch at the origin, or a family of conjugate branches over the base
// field. With X the parameter axis and Y the other variable,
//   X = cx t^E,   Y = head(t) + cy t^M y(t),
// where y(t) is the unique series with tail(t, y(t)) = 0, y(0) = 0 (tail is
// regular: tail_Y(0,0) != 0). Coefficients live in `field`, an extension of
// the base field given by the image of the base generator.
struct PuiseuxBranch {
  FieldRef base_field;
  FieldRef field;
  FieldElement base_image;
  int conjugacy_degree = 1;

  bool parameter_is_u = true;
  int exponent = 1;     // E
  int multiplicity = 1; // e = min(ord u(t), ord v(t))
  FieldElement cx;
  KPoly head;
  FieldElement cy;
  int tail_shift = 0;   // M
  BiPoly tail;          // in (T, Y) stored as (u, v)

  // Squarefree germ the branch belongs to, over the base field.
  std::shared_ptr<const BiPoly> germ;

  // u(t), v(t) modulo t^(order + 1).
  int order = 0;
  KPoly u_series;
  KPoly v_series;
};

struct BranchOptions {
  int order = 0;                // 0: max(8, 2 deg F)
  bool allow_extensions = true;
  FieldRef base_field;          // default: field of F's coefficients
  bool explicit_base = false;
};

// All branches of a squarefree germ up to conjugacy over the base field.
std::vector<PuiseuxBranch> branches(const germ::GermCurve& f, const BranchOptions& options = {});
inline std::vector<PuiseuxBranch> branches(const germ::GermCurve& f, int order) {
  BranchOptions o;
  o.order = order;
  return branches(f, o);
}

// Same branch expanded to at least the given order; earlier coefficients are
// unchanged.
PuiseuxBranch refine(const PuiseuxBranch& b, int order);

// ord_t H(u(t), v(t)), certified: a vanishing truncation triggers
// re-expansion up to an intersection-number bound, and infinity is returned
// only when H vanishes on the branch. H must be defined over the base field.
ExtNat branch_order(const PuiseuxBranch& b, const BiPoly& h);

// Reusable evaluator that keeps series powers between calls.
class BranchEvaluator {
 public:
  explicit BranchEvaluator(PuiseuxBranch b);
  ExtNat order(const BiPoly& h);
  // For coprime part and rest whose product contains the branch: whether
  // the branch lies on part. Decided by raising the precision until one of
  // the two restrictions is nonzero, so no gcd is needed.
  bool lies_on(const BiPoly& part, const BiPoly& rest);
  // H(u(t), v(t)) modulo t^(order + 1) with H already over the branch field.
  KPoly compose(const BiPoly& h_in_branch_field);
  const PuiseuxBranch& branch() const { return b_; }
  BiPoly to_branch_field(const BiPoly& h) const;

 private:
  void ensure_order(int n);
  PuiseuxBranch b_;
  std::vector<KPoly> upow_, vpow_;
};

// Default starting precision for a germ.
int default_order(const BiPoly& f);

}  // namespace orbisev::puiseux
