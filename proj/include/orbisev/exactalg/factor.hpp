#pragma once

#include <string>
#include <vector>

#include "orbisev/exactalg/bipoly.hpp"

namespace orbisev::exactalg {

using IntPoly = std::vector<Integer>;  // ascending

// Irreducible factors over Z of a primitive squarefree f of degree >= 1,
// each primitive with positive leading coefficient, sorted canonically.
std::vector<IntPoly> factor_squarefree_integer(const IntPoly& f);

bool is_irreducible_over_q(const IntPoly& f);

struct Factor {
  KPoly poly;  // monic, irreducible over the working field
  int multiplicity = 1;
};

// Complete factorization over k (null = Q) of a nonconstant polynomial whose
// coefficients lie in k. Factors are sorted by degree, then canonically.
std::vector<Factor> factor(const KPoly& p, const FieldRef& k);

// Norm_{k/Q} of a polynomial over k, as a rational polynomial.
UPoly<Rational> norm(const KPoly& p, const FieldRef& k);

// A field L containing k and a root of the irreducible monic phi.
struct Extension {
  FieldRef field;
  FieldElement root;        // phi(root) = 0 in L
  FieldElement base_image;  // image of k's generator in L (0 if k = Q)
};

Extension adjoin_root(const FieldRef& k, const KPoly& phi,
                      const std::string& generator = "a");

// Maps an element of k into L given the image of k's generator.
FieldElement embed(const FieldElement& x, const FieldRef& target,
                   const FieldElement& generator_image);

BiPoly embed(const BiPoly& p, const FieldRef& target, const FieldElement& generator_image);

// n with k = Q(zeta_n) (structurally), 1 for Q, 0 if k is not cyclotomic.
int cyclotomic_index(const FieldRef& k);

// A field containing a and b, with the images of their generators. Exists
// when the fields coincide or both are cyclotomic; FieldMismatch otherwise.
struct CommonField {
  FieldRef field;
  FieldElement image_a;
  FieldElement image_b;
};
CommonField common_extension(const FieldRef& a, const FieldRef& b);

}  // namespace orbisev::exactalg
