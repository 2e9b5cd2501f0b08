#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbisev/exactalg/bipoly.hpp"

namespace orbisev::groups {

using exactalg::BiPoly;
using exactalg::FieldElement;
using exactalg::FieldRef;
using exactalg::Integer;
using exactalg::Rational;

// [[a, b], [c, d]], acting on polynomials by p -> p(a u + b v, c u + d v).
struct Mat2 {
  FieldElement a{1}, b{0}, c{0}, d{1};
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  FieldElement det() const { return a * d - b * c; }
  Mat2 inverse_sl2() const { return {d, -b, -c, a}; }
  std::string to_string() const;
};

// Finite subgroup of SL(2) of ADE type. A_m is cyclic of order m + 1 (so the
// cyclic group of order n is A_{n-1}; A_0 is the trivial group); D_k is
// binary dihedral of order 4(k - 2); E6, E7, E8 are the binary tetrahedral,
// octahedral and icosahedral groups.
struct GroupData {
  std::string label;  // canonical: "A2", "D4", "E8"
  char type = 'A';
  int index = 0;
  FieldRef field;     // smallest cyclotomic field holding the generators
  std::vector<Mat2> generators;
  std::vector<Mat2> elements;
  int order = 1;
  int classes = 1;
  std::vector<int> class_sizes;
  std::vector<BiPoly> invariants;  // over Q, verified at build time
};

using GroupRef = std::shared_ptr<const GroupData>;

// Accepts "A2", "A_2", "A_{2}", "D4", "E6", ... and "trivial" (= A0).
// Results are cached and shared. Errors: InvalidArgument for unknown labels,
// UnsupportedField when the cyclotomic field would be impractically large.
GroupRef build_group(const std::string& label);

// p o M = p for every generator M. Polynomials over another field are
// compared in a common cyclotomic extension; FieldMismatch if none exists.
bool is_invariant(const BiPoly& p, const GroupData& g);

// p(a u + b v, c u + d v).
BiPoly act(const BiPoly& p, const Mat2& m);

Integer conjecture_rhs(const GroupData& g);

// Sum over the singular points of (#classes - 1/|G|).
Rational orbifold_correction(const std::vector<std::string>& labels);

struct SeveriLedger {
  Integer k2;
  Integer euler;
  std::vector<std::string> singularities;
  Integer chi;
  Rational e_orb;
  Rational correction;       // sum (#classes - 1/|G|)
  Rational kl_l2;            // (K + L) L^2
  Rational deficit;          // K^2 - 4 chi
  bool target_holds = false; // (K + L) L^2 >= correction
};

// Errors: NonIntegralChi when (k2 + euler) is not divisible by 12.
SeveriLedger severi_ledger(const Integer& k2, const Integer& euler,
                           const std::vector<std::string>& labels);

// Labels shown by the catalog: A0..A8, D4..D8, E6, E7, E8.
std::vector<std::string> catalog();

}  // namespace orbisev::groups
