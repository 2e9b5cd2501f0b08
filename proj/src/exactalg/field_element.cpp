#include "orbisev/exactalg/field_element.hpp"

#include <algorithm>

#include "orbisev/error.hpp"
#include "orbisev/exactalg/upoly.hpp"

namespace orbisev::exactalg {

FieldRef common_field(const FieldRef& a, const FieldRef& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (!same_field(a, b))
    throw Error(ErrorKind::FieldMismatch,
                "cannot combine " + field_description(a) + " with " + field_description(b));
  return a;
}

void FieldElement::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  if (c_.size() <= 1) field_.reset();
}

FieldElement FieldElement::generator(const FieldRef& k) {
  if (!k) throw Error(ErrorKind::UnsupportedField, "the rationals have no generator");
  return from_coefficients(k, {Rational(0), Rational(1)});
}

FieldElement FieldElement::from_coefficients(const FieldRef& k, std::vector<Rational> c) {
  FieldElement e;
  e.c_ = std::move(c);
  if (k) {
    k->reduce(e.c_);
    e.field_ = k;
  } else if (e.c_.size() > 1) {
    while (!e.c_.empty() && sgn(e.c_.back()) == 0) e.c_.pop_back();
    if (e.c_.size() > 1)
      throw Error(ErrorKind::FieldMismatch, "irrational coefficients without a field");
  }
  e.normalize();
  return e;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "element is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.c_.empty()) return *this;
  field_ = common_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (o.c_.empty()) return *this;
  field_ = common_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (c_.empty()) return *this;
  if (o.c_.empty()) {
    c_.clear();
    field_.reset();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (c_.size() == 1) {
    Rational s = c_[0];
    c_ = o.c_;
    field_ = o.field_;
    for (auto& c : c_) c *= s;
    return *this;
  }
  FieldRef k = common_field(field_, o.field_);
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  k->reduce(r);
  c_ = std::move(r);
  field_ = k;
  normalize();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (c_.empty()) throw std::domain_error("inverse of zero");
  if (c_.size() == 1) return FieldElement(Rational(1) / c_[0]);
  UPoly<Rational> a(c_), m(field_->modulus());
  auto eg = extended_gcd(a, m);
  if (eg.g.degree() != 0) internal_error("non-invertible element in a field");
  return from_coefficients(field_, eg.s.coeffs());
}

FieldElement FieldElement::pow(unsigned k) const {
  FieldElement r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.c_ != b.c_) return false;
  if (a.is_rational()) return true;
  return same_field(a.field_, b.field_);
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string FieldElement::to_string() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  const std::string& z = field_->generator_name();
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    bool show = (a != 1) || i == 0;
    if (show) s += a.get_str();
    if (i > 0) {
      if (show) s += "*";
      s += z;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace orbisev::exactalg
