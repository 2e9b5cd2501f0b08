#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orbisev/exactalg/number_field.hpp"
#include "orbisev/exactalg/rational.hpp"

namespace orbisev::exactalg {

// Element of Q or of a NumberField, stored as a reduced coefficient vector in
// the power basis. Rational values drop their field so that every value has
// exactly one representation; a rational mixes freely with any field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int v) : c_{Rational(v)} { normalize(); }
  FieldElement(const Rational& r) : c_{r} { normalize(); }
  FieldElement(const Integer& z) : c_{Rational(z)} { normalize(); }

  static FieldElement generator(const FieldRef& k);
  static FieldElement from_coefficients(const FieldRef& k, std::vector<Rational> c);

  // Null for rational values.
  const FieldRef& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;

  FieldElement inverse() const;
  FieldElement pow(unsigned k) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator-(FieldElement a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // Total order used only for deterministic sorting.
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);

  // Canonical text in the generator name: "3/2", "-z", "z^2 - 2*z + 1/3".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.to_string();
  }

 private:
  void normalize();
  FieldRef field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }
inline FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a / b; }

// The field both operands live in; throws FieldMismatch for distinct fields.
FieldRef common_field(const FieldRef& a, const FieldRef& b);

// A square root of -1 inside k, if one exists.
std::optional<FieldElement> imaginary_unit(const FieldRef& k);

}  // namespace orbisev::exactalg
