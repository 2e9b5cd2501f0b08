#include "orbisev/exactalg/bipoly.hpp"

#include <optional>

#include "orbisev/error.hpp"

namespace orbisev::exactalg {

namespace {

using VPoly = UPoly<FieldElement>;
using RecPoly = UPoly<VPoly>;

using Residues = std::vector<uint64_t>;

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

// Image modulo p, or nothing when a denominator or the leading coefficient
// vanishes there.
std::optional<Residues> reduce_mod(const KPoly& a, uint64_t p) {
  Residues out;
  for (const auto& c : a.coeffs()) {
    if (!c.is_rational()) return std::nullopt;
    const Rational q = c.rational_value();
    const uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    const uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    out.push_back(mul_mod(num, pow_mod(den, p - 2, p), p));
  }
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

int gcd_degree_mod(Residues a, Residues b, uint64_t p) {
  auto trim = [](Residues& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (a.size() >= b.size()) {
      const uint64_t inv = pow_mod(b.back(), p - 2, p);
      while (a.size() >= b.size() && !a.empty()) {
        const uint64_t f = mul_mod(a.back(), inv, p);
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
          a[shift + i] = (a[shift + i] + p - mul_mod(f, b[i], p)) % p;
        trim(a);
      }
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

VPoly content(const RecPoly& r) {
  VPoly g;
  for (const auto& c : r.coeffs()) {
    if (g.degree() > 0 && c.degree() > 0 && coprime_modular(g, c)) return VPoly(FieldElement(1));
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

RecPoly divide_coefficients(const RecPoly& r, const VPoly& c) {
  std::vector<VPoly> out;
  out.reserve(r.coeffs().size());
  for (const auto& x : r.coeffs()) out.push_back(exact_quotient(x, c));
  return RecPoly(std::move(out));
}

// Primitive part with the leading coefficient of the leading coefficient
// scaled to 1 to keep rational growth in check.
RecPoly primitive_part(const RecPoly& r) {
  if (r.is_zero()) return r;
  RecPoly p = divide_coefficients(r, content(r));
  FieldElement s = p.lc().lc().inverse();
  std::vector<VPoly> out;
  for (const auto& x : p.coeffs()) out.push_back(s * x);
  return RecPoly(std::move(out));
}

// Coprime images at some v = v0 that keeps both leading coefficients
// prove that the primitive gcd is 1 (its image would divide both with full
// degree). Most gcds in practice are trivial, and the PRS is expensive.
bool coprime_by_specialization(const RecPoly& a, const RecPoly& b) {
  int tried = 0;
  for (int v0 : {1, -1, 2, -2, 3, -3, 5, 7}) {
    const FieldElement x(v0);
    if (evaluate(a.lc(), x).is_zero() || evaluate(b.lc(), x).is_zero()) continue;
    auto image = [&](const RecPoly& r) {
      std::vector<FieldElement> c;
      for (const auto& k : r.coeffs()) c.push_back(evaluate(k, x));
      return VPoly(std::move(c));
    };
    const VPoly ia = image(a), ib = image(b);
    if (coprime_modular(ia, ib) || gcd(ia, ib).degree() == 0) return true;
    if (++tried == 2) break;
  }
  return false;
}

RecPoly primitive_gcd(RecPoly a, RecPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() > 0 && coprime_by_specialization(a, b)) return RecPoly(VPoly(FieldElement(1)));
  while (true) {
    if (b.is_zero()) return a;
    if (b.degree() == 0) return RecPoly(VPoly(FieldElement(1)));
    RecPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
}

}  // namespace

bool coprime_modular(const KPoly& a, const KPoly& b) {
  if (a.degree() < 1 || b.degree() < 1) return a.degree() == 0 || b.degree() == 0;
  for (uint64_t p : {4611686018427387847ULL, 4611686018427387817ULL}) {
    auto ra = reduce_mod(a, p), rb = reduce_mod(b, p);
    if (!ra || !rb) continue;
    return gcd_degree_mod(std::move(*ra), std::move(*rb), p) == 0;
  }
  return false;
}

FieldRef coefficient_field(const BiPoly& p) {
  FieldRef k;
  for (const auto& [m, c] : p.terms()) k = common_field(k, c.field());
  return k;
}

FieldRef coefficient_field(const KPoly& p) {
  FieldRef k;
  for (const auto& c : p.coeffs()) k = common_field(k, c.field());
  return k;
}

BiPoly normalize_grlex(const BiPoly& p) {
  if (p.is_zero() || p.leading_coefficient().is_one()) return p;
  return p.leading_coefficient().inverse() * p;
}

BiPoly gcd(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0)");
  if (p.is_zero()) return normalize_grlex(q);
  if (q.is_zero()) return normalize_grlex(p);
  RecPoly a = to_recursive(p, Var::U), b = to_recursive(q, Var::U);
  VPoly ca = content(a), cb = content(b);
  VPoly c = gcd(ca, cb);
  RecPoly g = primitive_gcd(primitive_part(divide_coefficients(a, ca)),
                           primitive_part(divide_coefficients(b, cb)));
  std::vector<VPoly> scaled;
  for (const auto& x : g.coeffs()) scaled.push_back(x * c);
  return normalize_grlex(from_recursive(RecPoly(std::move(scaled)), Var::U));
}

SquarefreeDecomposition squarefree_decomposition(const BiPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  SquarefreeDecomposition out;
  BiPoly pu = derivative(p, Var::U), pv = derivative(p, Var::V);
  if (pu.is_zero() && pv.is_zero()) {
    out.unit = p;
    return out;
  }
  BiPoly c = gcd(gcd(p, pu), pv);
  BiPoly w = exact_div(p, c);
  BiPoly through(1);
  for (int k = 1; w.total_degree() > 0; ++k) {
    BiPoly y = gcd(w, c);
    BiPoly a = exact_div(w, y);
    if (a.total_degree() > 0 && a.constant_term().is_zero()) {
      a = normalize_grlex(a);
      out.factors.emplace_back(a, k);
      through *= a.pow(k);
    }
    w = std::move(y);
    c = exact_div(c, w);
  }
  out.unit = exact_div(p, through);
  return out;
}

BiPoly squarefree_part(const BiPoly& p) {
  BiPoly pu = derivative(p, Var::U), pv = derivative(p, Var::V);
  if (pu.is_zero() && pv.is_zero()) return p.is_zero() ? p : BiPoly(1);
  return normalize_grlex(exact_div(p, gcd(gcd(p, pu), pv)));
}

namespace {

std::string monomial_text(Monomial m) {
  std::string s;
  if (m.a > 0) s += m.a == 1 ? "u" : "u^" + std::to_string(m.a);
  if (m.b > 0) {
    if (!s.empty()) s += "*";
    s += m.b == 1 ? "v" : "v^" + std::to_string(m.b);
  }
  return s;
}

void append_term(std::string& s, const FieldElement& c, const std::string& mono) {
  if (c.is_rational()) {
    Rational r = c.rational_value();
    Rational a = abs(r);
    if (s.empty()) {
      if (sgn(r) < 0) s += "-";
    } else {
      s += sgn(r) < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
    return;
  }
  if (!s.empty()) s += " + ";
  s += "(" + c.to_string() + ")";
  if (!mono.empty()) s += "*" + mono;
}

}  // namespace

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) append_term(s, c, monomial_text(m));
  return s;
}

std::string to_string(const KPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff(i).is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    append_term(s, p.coeff(i), mono);
  }
  return s;
}

}  // namespace orbisev::exactalg
