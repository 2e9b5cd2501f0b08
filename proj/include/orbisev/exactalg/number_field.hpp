#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbisev/exactalg/rational.hpp"

namespace orbisev::exactalg {

class NumberField;
// A null FieldRef stands for the rationals.
using FieldRef = std::shared_ptr<const NumberField>;

// Q[z]/m(z) with m monic, integral and irreducible of degree >= 2.
class NumberField {
 public:
  // minpoly is ascending and monic. Irreducibility is verified unless the
  // caller already knows it (cyclotomic polynomials, Trager norms).
  static FieldRef create(std::vector<Integer> minpoly, std::string generator = "z",
                         bool verify_irreducible = true);
  // Q(zeta_n) with generator named "z"; null for n = 1, 2.
  static FieldRef cyclotomic(int n, std::string generator = "z");

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<Rational>& modulus() const { return modulus_; }
  const std::vector<Integer>& integer_modulus() const { return int_modulus_; }
  const std::string& generator_name() const { return generator_; }
  // n when built by cyclotomic(n), else 0.
  int cyclotomic_order() const { return cyclotomic_order_; }

  // "z^2 + 1"-style text of the minimal polynomial.
  std::string minpoly_string() const;

  // Reduces a coefficient vector (ascending) modulo the minimal polynomial.
  void reduce(std::vector<Rational>& c) const;

 private:
  NumberField() = default;
  std::vector<Rational> modulus_;
  std::vector<Integer> int_modulus_;
  std::string generator_;
  int cyclotomic_order_ = 0;
};

// Structural equality: same minimal polynomial (generator names ignored).
bool same_field(const FieldRef& a, const FieldRef& b);

// Ascending integer coefficients of the n-th cyclotomic polynomial.
std::vector<Integer> cyclotomic_polynomial(int n);

std::string field_description(const FieldRef& k);

}  // namespace orbisev::exactalg
