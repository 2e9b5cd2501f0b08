#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbisev/exactalg/extnat.hpp"
#include "orbisev/exactalg/upoly.hpp"

namespace orbisev::exactalg {

enum class Var { U, V };

// Exponent pair of u^a v^b.
struct Monomial {
  int a = 0;
  int b = 0;
  int total() const { return a + b; }
  friend bool operator==(Monomial x, Monomial y) { return x.a == y.a && x.b == y.b; }
};

// Graded-lex, u > v, largest first.
struct GrlexGreater {
  bool operator()(Monomial x, Monomial y) const {
    if (x.total() != y.total()) return x.total() > y.total();
    return x.a > y.a;
  }
};

// Sparse bivariate polynomial in u, v. Terms are kept in graded-lex
// descending order, so the order at the origin is the total degree of the
// last stored term.
template <class C>
class Poly2 {
 public:
  using Terms = std::map<Monomial, C, GrlexGreater>;
  using coefficient_type = C;

  Poly2() = default;
  Poly2(const C& c) { add_term({0, 0}, c); }
  Poly2(int c) : Poly2(C(c)) {}

  static Poly2 monomial(const C& c, int a, int b) {
    Poly2 p;
    p.add_term({a, b}, c);
    return p;
  }
  static Poly2 u() { return monomial(C(1), 1, 0); }
  static Poly2 v() { return monomial(C(1), 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const C& coeff(int a, int b) const {
    static const C zero(0);
    auto it = terms_.find({a, b});
    return it == terms_.end() ? zero : it->second;
  }
  const C& constant_term() const { return coeff(0, 0); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
  }

  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }
  int degree(Var x) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, x == Var::U ? m.a : m.b);
    return d;
  }
  // Largest power of x dividing every term (0 for the zero polynomial).
  int low_degree(Var x) const {
    if (terms_.empty()) return 0;
    int d = 1 << 30;
    for (const auto& [m, c] : terms_) d = std::min(d, x == Var::U ? m.a : m.b);
    return d;
  }
  ExtNat order_at_origin() const {
    if (terms_.empty()) return ExtNat::infinity();
    return terms_.rbegin()->first.total();
  }

  const std::pair<const Monomial, C>& leading_term() const { return *terms_.begin(); }
  const C& leading_coefficient() const { return terms_.begin()->second; }

  Poly2 homogeneous_component(int d) const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
      if (m.total() == d) r.terms_.emplace(m, c);
    return r;
  }
  // Lowest-degree homogeneous part (the tangent cone form at the origin).
  Poly2 initial_form() const {
    if (terms_.empty()) return Poly2();
    return homogeneous_component(terms_.rbegin()->first.total());
  }

  void add_term(Monomial m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(Poly2 a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term({ma.a + mb.a, ma.b + mb.b}, ca * cb);
    return r;
  }
  friend Poly2 operator*(const C& s, Poly2 a) {
    if (coeff_is_zero(s)) return Poly2();
    for (auto& [m, c] : a.terms_) c = s * c;
    return a;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  Poly2 pow(unsigned k) const {
    Poly2 r(1), b = *this;
    while (k) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  // Multiply by u^a v^b.
  Poly2 shifted(int a, int b) const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.a + a, m.b + b}, c);
    return r;
  }

 private:
  Terms terms_;
};

template <class C>
bool is_zero(const Poly2<C>& p) {
  return p.is_zero();
}

template <class C>
Poly2<C> derivative(const Poly2<C>& p, Var x) {
  Poly2<C> r;
  for (const auto& [m, c] : p.terms()) {
    int e = x == Var::U ? m.a : m.b;
    if (e == 0) continue;
    Monomial n = x == Var::U ? Monomial{m.a - 1, m.b} : Monomial{m.a, m.b - 1};
    r.add_term(n, C(e) * c);
  }
  return r;
}

// Jacobian determinant p_u q_v - p_v q_u.
template <class C>
Poly2<C> jacobian(const Poly2<C>& p, const Poly2<C>& q) {
  return derivative(p, Var::U) * derivative(q, Var::V) -
         derivative(p, Var::V) * derivative(q, Var::U);
}

// p(x, y) for x, y in any commutative ring R receiving C via R(C).
template <class C, class R>
R substitute(const Poly2<C>& p, const R& x, const R& y) {
  std::vector<R> xp{R(1)}, yp{R(1)};
  R out(0);
  for (const auto& [m, c] : p.terms()) {
    while (static_cast<int>(xp.size()) <= m.a) xp.push_back(xp.back() * x);
    while (static_cast<int>(yp.size()) <= m.b) yp.push_back(yp.back() * y);
    out = out + R(c) * xp[m.a] * yp[m.b];
  }
  return out;
}

template <class C, class F>
auto map_coefficients(const Poly2<C>& p, F&& f) -> Poly2<decltype(f(std::declval<const C&>()))> {
  Poly2<decltype(f(std::declval<const C&>()))> r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, f(c));
  return r;
}

// p(u, 0) as a polynomial in u (or p(0, v) in v).
template <class C>
UPoly<C> restrict_to_axis(const Poly2<C>& p, Var keep) {
  std::vector<C> c;
  for (const auto& [m, k] : p.terms()) {
    int e = keep == Var::U ? m.a : m.b;
    int other = keep == Var::U ? m.b : m.a;
    if (other != 0) continue;
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1, C(0));
    c[e] = k;
  }
  return UPoly<C>(std::move(c));
}

// Recursive view: polynomial in `main` whose coefficients are polynomials in
// the other variable.
template <class C>
UPoly<UPoly<C>> to_recursive(const Poly2<C>& p, Var main) {
  std::vector<std::vector<C>> rows;
  for (const auto& [m, c] : p.terms()) {
    int i = main == Var::U ? m.a : m.b;
    int j = main == Var::U ? m.b : m.a;
    if (static_cast<int>(rows.size()) <= i) rows.resize(i + 1);
    if (static_cast<int>(rows[i].size()) <= j) rows[i].resize(j + 1, C(0));
    rows[i][j] = c;
  }
  std::vector<UPoly<C>> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return UPoly<UPoly<C>>(std::move(out));
}

template <class C>
Poly2<C> from_recursive(const UPoly<UPoly<C>>& r, Var main) {
  Poly2<C> p;
  for (int i = 0; i <= r.degree(); ++i) {
    const auto& row = r.coeff(i);
    for (int j = 0; j <= row.degree(); ++j)
      p.add_term(main == Var::U ? Monomial{i, j} : Monomial{j, i}, row.coeff(j));
  }
  return p;
}

// Exact division by graded-lex reduction; nullopt when d does not divide p.
// Coefficients must form a field.
template <class C>
std::optional<Poly2<C>> try_divide(Poly2<C> p, const Poly2<C>& d) {
  if (d.is_zero()) return std::nullopt;
  const auto& [dm, dc] = d.leading_term();
  const C inv = C(1) / dc;
  Poly2<C> q;
  while (!p.is_zero()) {
    const auto& [pm, pc] = p.leading_term();
    if (pm.a < dm.a || pm.b < dm.b) return std::nullopt;
    Poly2<C> t = Poly2<C>::monomial(pc * inv, pm.a - dm.a, pm.b - dm.b);
    q += t;
    p -= t * d;
  }
  return q;
}

template <class C>
Poly2<C> exact_div(const Poly2<C>& p, const Poly2<C>& d) {
  auto q = try_divide(p, d);
  if (!q) throw std::domain_error("inexact bivariate division");
  return *q;
}

template <class C>
bool divides(const Poly2<C>& d, const Poly2<C>& p) {
  return try_divide(p, d).has_value();
}

}  // namespace orbisev::exactalg
