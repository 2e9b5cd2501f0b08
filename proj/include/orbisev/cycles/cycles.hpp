#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbisev/exactalg/bipoly.hpp"
#include "orbisev/groups/groups.hpp"
#include "orbisev/puiseux/puiseux.hpp"

namespace orbisev::cycles {

using exactalg::BiPoly;
using exactalg::ExtNat;
using exactalg::FieldRef;
using exactalg::Rational;
using puiseux::PuiseuxBranch;

// The 1-form P du + Q dv; exact when (P, Q) = (H_u, H_v).
struct FormSection {
  BiPoly p, q;
  bool exact = false;
  BiPoly potential;

  static FormSection differential(const BiPoly& h);
};

struct Component {
  BiPoly poly;           // A_k, squarefree
  int multiplicity = 1;  // n_k
  bool divides_f = false;
  bool divides_g = false;
};

// J = f_u g_v - f_v g_u = unit * prod A_k^{n_k}, h = prod A_k.
struct JacobianData {
  BiPoly f, g;
  FieldRef field;
  BiPoly jacobian;
  BiPoly unit;
  BiPoly h;
  std::vector<Component> components;
};

// Errors: InvalidArgument for constant inputs or nonzero constant terms,
// DegenerateWedge when J = 0.
JacobianData wedge(const BiPoly& f, const BiPoly& g);

enum class LiftSource { F, G };

struct BranchRecord {
  int component = 0;
  PuiseuxBranch branch;
  LiftSource lift = LiftSource::F;
  int64_t beta = 0;
  int64_t gamma = 0;
  // ord of (lifted section) ^ dh along the branch.
  int64_t pairing = 0;
  // ord of (lifted section) ^ dA_k minus beta and gamma; never negative.
  int64_t section_term = 0;
};

struct CycleLedger {
  JacobianData jacobian;
  BiPoly c_f, c_g;
  FormSection primitive_f, primitive_g;
  std::vector<BranchRecord> branches;
  // Per component: sum over its branches (with conjugates) of pairing and beta.
  std::vector<int64_t> component_pairing;
  std::vector<int64_t> component_beta;
  int64_t m0 = 0;
  // Some component of h divides f (the lift was moved to g there).
  bool strict_hypothesis_violated = false;
};

// Common vanishing order of the section's coefficients along the branch.
// Errors: LiftUndefined when both vanish identically on it.
int64_t beta_profile(const PuiseuxBranch& branch, const FormSection& section);

// Multiplicity of the central fiber in L_df . L_dg: the intersection number
// over K(w) of f_u + w f_v and g_u + w g_v, recovered exactly from enough
// specializations of w in each fiber chart. Errors: DegenerateWedge,
// ImproperCycle.
int64_t fiber_multiplicity_m0(const BiPoly& f, const BiPoly& g);

// The same number by Fulton's algorithm over K(w) directly. Exact but prone
// to coefficient growth; kept as an independent check.
int64_t fiber_multiplicity_function_field(const BiPoly& f, const BiPoly& g);

struct CycleOptions {
  int order = 0;  // Puiseux precision floor; 0 picks a default per component
  // Recompute each component's pairing as an intersection number and compare
  // with the branch sum. Exact but slow on high-degree components.
  bool cross_check = false;
};

// Errors: TypeZeroBranch when a branch of h lies on both f = 0 and g = 0,
// plus everything wedge() raises.
CycleLedger cycle_decomposition(const BiPoly& f, const BiPoly& g, const CycleOptions& options = {});

// sum_k n_k (pairing_k - beta_k) + m0.
int64_t assemble_triple(const CycleLedger& ledger);

struct TripleResult {
  CycleLedger ledger;
  int64_t triple = 0;
  int64_t swapped_triple = 0;  // same computation with f and g exchanged
};

// Both orders of (f, g); a mismatch is an internal error.
TripleResult evaluate_triple(const BiPoly& f, const BiPoly& g, const CycleOptions& options = {});
int64_t triple_product(const BiPoly& f, const BiPoly& g, const CycleOptions& options = {});

struct ClaimIICheck {
  bool applicable = true;  // false when some component divides f
  bool holds = true;
  ExtNat lhs = 0;
  ExtNat rhs = 0;
  std::string detail;
};

// I_0(Jac(f,h), J) against sum_i n_i (I_0(Jac(f,A_i), A_i) + sum_{j != i} I_0(A_j, A_i)).
ClaimIICheck claim_ii_check(const BiPoly& f, const BiPoly& g);

// triple / |G| after checking invariance. Errors: NotInvariant.
Rational local_contribution(const BiPoly& f, const BiPoly& g, const groups::GroupData& group);

struct EqualityDiagnostics {
  int n = 1;
  int jacobian_multiplicity = 0;  // mult_0(J)
  bool multiplicity_equals_n = false;
  bool transforms_smooth = true;
  bool transforms_disjoint = true;
  bool criteria_met = false;
  std::string note;
};

// mult_0(J) = n and one blowup separates and smooths the reduced components.
// A Jacobian that is a unit at the origin meets the criteria trivially.
EqualityDiagnostics equality_case_diagnostics(const BiPoly& f, const BiPoly& g, int n);

std::string lift_name(LiftSource s);

}  // namespace orbisev::cycles
