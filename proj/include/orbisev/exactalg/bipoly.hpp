#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbisev/exactalg/field_element.hpp"
#include "orbisev/exactalg/poly2.hpp"
#include "orbisev/exactalg/upoly.hpp"

namespace orbisev::exactalg {

using BiPoly = Poly2<FieldElement>;
// Polynomial in an auxiliary variable (w or t).
template <class C>
using AuxPoly = UPoly<C>;
using KPoly = UPoly<FieldElement>;

// Field generated by the coefficients (null if all are rational); throws
// FieldMismatch if two different fields occur.
FieldRef coefficient_field(const BiPoly& p);
FieldRef coefficient_field(const KPoly& p);

// Scales p so that its graded-lex leading coefficient is 1.
BiPoly normalize_grlex(const BiPoly& p);

// gcd normalized to graded-lex leading coefficient 1, via primitive
// remainder sequences in K[v][u].
BiPoly gcd(const BiPoly& p, const BiPoly& q);

// True when a and b have rational coefficients and coprime images modulo a
// prime dividing neither leading coefficient, which proves gcd(a, b) = 1.
// False means "not proven".
bool coprime_modular(const KPoly& a, const KPoly& b);

struct SquarefreeDecomposition {
  // Product of the factors that do not vanish at the origin, times the
  // scalar making the identity exact.
  BiPoly unit;
  // (A_k, k): squarefree, pairwise coprime, vanishing at the origin,
  // graded-lex monic; k increasing.
  std::vector<std::pair<BiPoly, int>> factors;
};

SquarefreeDecomposition squarefree_decomposition(const BiPoly& p);

// Squarefree part normalized graded-lex monic.
BiPoly squarefree_part(const BiPoly& p);

// Canonical text: graded-lex descending terms, e.g. "u^2 - 3/2*u*v + (z + 1)*v".
std::string to_string(const BiPoly& p);
std::string to_string(const KPoly& p, const std::string& var);

}  // namespace orbisev::exactalg
