#include "orbisev/exactalg/number_field.hpp"

#include "orbisev/error.hpp"
#include "orbisev/exactalg/factor.hpp"
#include "orbisev/exactalg/upoly.hpp"

namespace orbisev::exactalg {

FieldRef NumberField::create(std::vector<Integer> minpoly, std::string generator,
                             bool verify_irreducible) {
  while (!minpoly.empty() && minpoly.back() == 0) minpoly.pop_back();
  if (minpoly.size() < 3 || minpoly.back() != 1)
    throw Error(ErrorKind::UnsupportedField,
                "minimal polynomial must be monic of degree >= 2");
  if (verify_irreducible && !is_irreducible_over_q(minpoly))
    throw Error(ErrorKind::UnsupportedField, "minimal polynomial is reducible");
  auto* k = new NumberField();
  k->int_modulus_ = minpoly;
  for (const auto& c : minpoly) k->modulus_.emplace_back(c);
  k->generator_ = std::move(generator);
  return FieldRef(k);
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::UnsupportedField, "cyclotomic order must be >= 1");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  UPoly<Rational> p = UPoly<Rational>::monomial(Rational(1), n) - UPoly<Rational>(1);
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<Rational> pd;
    for (const auto& c : cyclotomic_polynomial(d)) pd.emplace_back(c);
    p = exact_quotient(p, UPoly<Rational>(pd));
  }
  std::vector<Integer> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_num());
  return out;
}

FieldRef NumberField::cyclotomic(int n, std::string generator) {
  if (n <= 2) {
    if (n < 1) throw Error(ErrorKind::UnsupportedField, "cyclotomic order must be >= 1");
    return nullptr;
  }
  auto k = create(cyclotomic_polynomial(n), std::move(generator), false);
  const_cast<NumberField&>(*k).cyclotomic_order_ = n;
  return k;
}

std::string NumberField::minpoly_string() const {
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = int_modulus_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool show = (a != 1) || i == 0;
    if (show) s += a.get_str();
    if (i > 0) {
      if (show) s += "*";
      s += generator_;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

void NumberField::reduce(std::vector<Rational>& c) const {
  const int d = degree();
  for (int k = static_cast<int>(c.size()) - 1; k >= d; --k) {
    if (sgn(c[k]) == 0) continue;
    Rational f = c[k];
    for (int i = 0; i < d; ++i)
      if (int_modulus_[i] != 0) c[k - d + i] -= f * modulus_[i];
    c[k] = 0;
  }
  if (static_cast<int>(c.size()) > d) c.resize(d);
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

bool same_field(const FieldRef& a, const FieldRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->integer_modulus() == b->integer_modulus();
}

std::string field_description(const FieldRef& k) {
  if (!k) return "Q";
  return "Q[" + k->generator_name() + "]/(" + k->minpoly_string() + ")";
}

}  // namespace orbisev::exactalg
