#include <algorithm>
#include <numeric>

#include "orbisev/error.hpp"
#include "orbisev/exactalg/factor.hpp"
#include "orbisev/exactalg/resultant.hpp"

namespace orbisev::exactalg {

namespace {

using QPoly = UPoly<Rational>;

Rational element_norm(const FieldElement& a, const FieldRef& k) {
  if (!k) return a.rational_value();
  if (a.is_rational()) {
    Rational r = a.rational_value(), out(1);
    for (int i = 0; i < k->degree(); ++i) out *= r;
    return out;
  }
  // m is monic, so Res(m, a) is the product of the conjugates of a.
  return resultant_euclid(QPoly(k->modulus()), QPoly(a.coefficients()));
}

// Newton interpolation through (i, values[i]), i = 0..n.
QPoly interpolate(const std::vector<Rational>& values) {
  const size_t n = values.size();
  std::vector<Rational> dd = values;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(j));
  QPoly r(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    QPoly lin(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
    r = r * lin + QPoly(dd[i]);
  }
  return r;
}

// p(z + c).
KPoly shift(const KPoly& p, const FieldElement& c) {
  KPoly lin(std::vector<FieldElement>{c, FieldElement(1)});
  return compose(p, lin);
}

std::vector<KPoly> factor_squarefree_rational(const KPoly& a) {
  Integer den(1);
  for (const auto& c : a.coeffs()) {
    Rational r = c.rational_value();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  }
  IntPoly ip;
  for (const auto& c : a.coeffs()) {
    Rational r = c.rational_value() * Rational(den);
    ip.push_back(r.get_num());
  }
  std::vector<KPoly> out;
  for (const auto& f : factor_squarefree_integer(ip)) {
    std::vector<FieldElement> c;
    for (const auto& x : f) c.emplace_back(Rational(x));
    out.push_back(monic(KPoly(std::move(c))));
  }
  return out;
}

// Smallest-|s| shift making Norm(a(z - s*theta)) squarefree.
std::pair<int, QPoly> squarefree_norm(const KPoly& a, const FieldRef& k) {
  const FieldElement theta = FieldElement::generator(k);
  for (int i = 0;; ++i) {
    int s = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
    KPoly psi = shift(a, FieldElement(-s) * theta);
    QPoly n = norm(psi, k);
    if (gcd(n, derivative(n)).degree() == 0) return {s, n};
    if (i > 200) internal_error("no squarefree norm shift found");
  }
}

std::vector<KPoly> factor_squarefree(const KPoly& a, const FieldRef& k) {
  if (a.degree() == 1) return {monic(a)};
  if (!k) return factor_squarefree_rational(a);
  auto [s, n] = squarefree_norm(a, k);
  std::vector<FieldElement> nc;
  for (const auto& x : n.coeffs()) nc.emplace_back(x);
  auto nf = factor_squarefree_rational(KPoly(std::move(nc)));
  if (nf.size() == 1) return {monic(a)};
  const FieldElement st = FieldElement(s) * FieldElement::generator(k);
  std::vector<KPoly> out;
  for (const auto& ni : nf) out.push_back(gcd(a, shift(ni, st)));
  return out;
}

bool canonical_kpoly_less(const KPoly& a, const KPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (canonical_less(a.coeff(i), b.coeff(i))) return true;
    if (canonical_less(b.coeff(i), a.coeff(i))) return false;
  }
  return false;
}

}  // namespace

QPoly norm(const KPoly& p, const FieldRef& k) {
  if (!k) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(x.rational_value());
    return QPoly(std::move(c));
  }
  const int deg = k->degree() * p.degree();
  std::vector<Rational> values;
  for (int i = 0; i <= deg; ++i)
    values.push_back(element_norm(evaluate(p, FieldElement(i)), k));
  return interpolate(values);
}

std::vector<Factor> factor(const KPoly& p, const FieldRef& k) {
  if (p.degree() < 1) throw std::domain_error("factoring a constant");
  common_field(coefficient_field(p), k);
  std::vector<Factor> out;
  auto parts = squarefree_yun(p);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (auto& f : factor_squarefree(parts[i], k))
      out.push_back({std::move(f), static_cast<int>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (canonical_kpoly_less(a.poly, b.poly)) return true;
    if (canonical_kpoly_less(b.poly, a.poly)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

FieldElement embed(const FieldElement& x, const FieldRef& target,
                   const FieldElement& generator_image) {
  if (x.is_rational()) return x;
  if (same_field(x.field(), target)) return x;
  FieldElement r(0);
  const auto& c = x.coefficients();
  for (size_t i = c.size(); i-- > 0;) r = r * generator_image + FieldElement(c[i]);
  return r;
}

namespace {

// Field generated by a root of the monic rational polynomial n, with the
// generator scaled to an algebraic integer. Returns (L, root of n in L).
std::pair<FieldRef, FieldElement> field_from_rational_minpoly(const QPoly& n,
                                                              const std::string& name) {
  const int d = n.degree();
  Integer den(1);
  for (const auto& c : n.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  // gamma = den * beta has minpoly sum c_i den^(d-i) x^i.
  IntPoly ip(d + 1);
  Integer power(1);
  for (int i = d; i >= 0; --i) {
    Rational v = n.coeff(i) * Rational(power);
    ip[i] = v.get_num();
    power *= den;
  }
  FieldRef L = NumberField::create(ip, name, false);
  FieldElement beta = FieldElement::generator(L) * FieldElement(Rational(1) / Rational(den));
  return {L, beta};
}

}  // namespace

Extension adjoin_root(const FieldRef& k, const KPoly& phi_in, const std::string& generator) {
  KPoly phi = monic(phi_in);
  if (phi.degree() < 1) throw std::domain_error("adjoining a root of a constant");
  FieldElement k_gen = k ? FieldElement::generator(k) : FieldElement(0);
  if (phi.degree() == 1) return {k, -phi.coeff(0), k_gen};
  if (!k) {
    std::vector<Rational> c;
    for (const auto& x : phi.coeffs()) c.push_back(x.rational_value());
    auto [L, beta] = field_from_rational_minpoly(QPoly(std::move(c)), generator);
    return {L, beta, FieldElement(0)};
  }
  auto [s, n] = squarefree_norm(phi, k);
  auto [L, beta] = field_from_rational_minpoly(n, generator);
  // theta is the common root in L of m(y) and phi(beta - s*y)|theta->y.
  KPoly y = KPoly::variable();
  KPoly lin = KPoly(beta) - FieldElement(s) * y;
  KPoly big;
  KPoly lin_pow(1);
  for (int i = 0; i <= phi.degree(); ++i) {
    const FieldElement& c = phi.coeff(i);
    std::vector<FieldElement> cy;
    if (c.is_rational())
      cy.push_back(c);
    else
      for (const auto& r : c.coefficients()) cy.emplace_back(r);
    big += KPoly(std::move(cy)) * lin_pow;
    lin_pow = lin_pow * lin;
  }
  std::vector<FieldElement> mc;
  for (const auto& r : k->modulus()) mc.emplace_back(r);
  KPoly g = gcd(KPoly(std::move(mc)), big);
  if (g.degree() != 1) internal_error("primitive element construction failed");
  FieldElement theta_img = -g.coeff(0);
  FieldElement root = beta - FieldElement(s) * theta_img;
  return {L, root, theta_img};
}

std::optional<FieldElement> imaginary_unit(const FieldRef& k) {
  if (!k) return std::nullopt;
  if (k->cyclotomic_order() % 4 == 0 && k->cyclotomic_order() > 0)
    return FieldElement::generator(k).pow(k->cyclotomic_order() / 4);
  KPoly x2p1(std::vector<FieldElement>{FieldElement(1), FieldElement(0), FieldElement(1)});
  for (const auto& f : factor(x2p1, k))
    if (f.poly.degree() == 1) return -f.poly.coeff(0);
  return std::nullopt;
}

BiPoly embed(const BiPoly& p, const FieldRef& target, const FieldElement& generator_image) {
  return map_coefficients(
      p, [&](const FieldElement& c) { return embed(c, target, generator_image); });
}

namespace {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

int cyclotomic_index(const FieldRef& k) {
  if (!k) return 1;
  if (k->cyclotomic_order() > 0) return k->cyclotomic_order();
  // Untagged fields (e.g. given by an explicit minimal polynomial).
  const int d = k->degree();
  for (int m = 3; m <= 8 * d * d + 8; ++m)
    if (euler_phi(m) == d && cyclotomic_polynomial(m) == k->integer_modulus()) return m;
  return 0;
}

CommonField common_extension(const FieldRef& a, const FieldRef& b) {
  auto gen = [](const FieldRef& k) { return k ? FieldElement::generator(k) : FieldElement(0); };
  if (!a) return {b, FieldElement(0), gen(b)};
  if (!b || same_field(a, b)) return {a, gen(a), b ? gen(a) : FieldElement(0)};
  const int ma = cyclotomic_index(a), mb = cyclotomic_index(b);
  if (ma == 0 || mb == 0)
    throw Error(ErrorKind::FieldMismatch,
                "no common field for " + field_description(a) + " and " + field_description(b));
  const int l = std::lcm(ma, mb);
  FieldRef k = NumberField::cyclotomic(l);
  FieldElement z = FieldElement::generator(k);
  return {k, z.pow(l / ma), z.pow(l / mb)};
}

}  // namespace orbisev::exactalg
