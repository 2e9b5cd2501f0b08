#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbisev/exactalg/rational.hpp"

namespace orbisev::exactalg {

// Dense univariate polynomial, coefficients in ascending order with no
// trailing zeros. Used in the auxiliary variable w or t, and as the inner
// ring K[v] of the recursive bivariate representation.
// Unqualified call so ADL finds is_zero for every coefficient type.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

template <class C>
class UPoly {
 public:
  using coefficient_type = C;

  UPoly() = default;
  UPoly(const C& c) {
    if (!coeff_is_zero(c)) c_.push_back(c);
  }
  UPoly(int c) : UPoly(C(c)) {}
  explicit UPoly(std::vector<C> c) : c_(std::move(c)) { trim(); }

  static UPoly monomial(const C& c, int k) {
    if (coeff_is_zero(c)) return UPoly();
    std::vector<C> v(k + 1, C(0));
    v[k] = c;
    UPoly p;
    p.c_ = std::move(v);
    return p;
  }
  static UPoly variable() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const C& coeff(int i) const {
    static const C zero(0);
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
  }
  const C& lc() const { return c_.back(); }
  const std::vector<C>& coeffs() const { return c_; }

  // Lowest index with a nonzero coefficient, -1 for the zero polynomial.
  int low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  void set_coeff(int i, const C& c) {
    if (i >= static_cast<int>(c_.size())) {
      if (coeff_is_zero(c)) return;
      c_.resize(i + 1, C(0));
    }
    c_[i] = c;
    trim();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const C& s, UPoly a) {
    if (coeff_is_zero(s)) return UPoly();
    for (auto& c : a.c_) c = s * c;
    a.trim();
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Multiply by x^k.
  UPoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    UPoly r;
    r.c_.assign(k, C(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  // Remainder modulo x^n.
  UPoly truncated(int n) const {
    if (static_cast<int>(c_.size()) <= n) return *this;
    return UPoly(std::vector<C>(c_.begin(), c_.begin() + std::max(n, 0)));
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

template <class C>
bool is_zero(const UPoly<C>& p) {
  return p.is_zero();
}

template <class C>
UPoly<C> derivative(const UPoly<C>& p) {
  if (p.degree() < 1) return UPoly<C>();
  std::vector<C> r(p.degree(), C(0));
  for (int i = 1; i <= p.degree(); ++i) r[i - 1] = C(i) * p.coeff(i);
  return UPoly<C>(std::move(r));
}

// Horner evaluation; works whenever X is a ring containing C via X * C.
template <class C, class X>
X evaluate(const UPoly<C>& p, const X& x) {
  X r(0);
  for (int i = p.degree(); i >= 0; --i) r = r * x + X(p.coeff(i));
  return r;
}

template <class C>
UPoly<C> compose(const UPoly<C>& p, const UPoly<C>& q) {
  UPoly<C> r;
  for (int i = p.degree(); i >= 0; --i) r = r * q + UPoly<C>(p.coeff(i));
  return r;
}

// Division with remainder over a field.
template <class C>
std::pair<UPoly<C>, UPoly<C>> divrem(const UPoly<C>& a, const UPoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<C> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly<C>(), a};
  std::vector<C> q(a.degree() - db + 1, C(0));
  const C inv = C(1) / b.lc();
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    C f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeff(j);
  }
  r.resize(db);
  return {UPoly<C>(std::move(q)), UPoly<C>(std::move(r))};
}

template <class C>
UPoly<C> operator%(const UPoly<C>& a, const UPoly<C>& b) {
  return divrem(a, b).second;
}

// Exact quotient over an integral domain whose elements support exact_div.
template <class C>
UPoly<C> exact_quotient(const UPoly<C>& a, const UPoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return UPoly<C>();
  std::vector<C> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) throw std::domain_error("inexact polynomial division");
  std::vector<C> q(a.degree() - db + 1, C(0));
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    C f = exact_div(r[k], b.lc());
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeff(j);
  }
  for (int k = 0; k < db; ++k)
    if (!is_zero(r[k])) throw std::domain_error("inexact polynomial division");
  return UPoly<C>(std::move(q));
}

template <class C>
UPoly<C> exact_div(const UPoly<C>& a, const UPoly<C>& b) {
  return exact_quotient(a, b);
}

// lc(b)^(deg a - deg b + 1) * a mod b, without divisions.
template <class C>
UPoly<C> pseudo_remainder(const UPoly<C>& a, const UPoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
  int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<C> r = a.coeffs();
  const C& l = b.lc();
  for (int k = a.degree(); k >= db; --k) {
    C f = r[k];
    for (int i = 0; i <= k; ++i) r[i] = l * r[i];
    if (!is_zero(f))
      for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeff(j);
  }
  r.resize(db);
  return UPoly<C>(std::move(r));
}

template <class C>
UPoly<C> monic(const UPoly<C>& p) {
  if (p.is_zero()) return p;
  return (C(1) / p.lc()) * p;
}

// Monic gcd over a field (zero only if both inputs are zero).
template <class C>
UPoly<C> gcd(UPoly<C> a, UPoly<C> b) {
  while (!b.is_zero()) {
    UPoly<C> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Returns (g, s, t) with s*a + t*b = g monic.
template <class C>
struct ExtendedGcd {
  UPoly<C> g, s, t;
};

template <class C>
ExtendedGcd<C> extended_gcd(const UPoly<C>& a, const UPoly<C>& b) {
  UPoly<C> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<C> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  C inv = C(1) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

// Yun's algorithm over a field of characteristic zero: returns squarefree
// a_1, a_2, ... with p = lc * prod a_i^i (entries may be 1).
template <class C>
std::vector<UPoly<C>> squarefree_yun(const UPoly<C>& p) {
  std::vector<UPoly<C>> out;
  if (p.degree() < 1) return out;
  UPoly<C> dp = derivative(p);
  UPoly<C> a = gcd(p, dp);
  UPoly<C> b = divrem(p, a).first;
  UPoly<C> c = divrem(dp, a).first;
  UPoly<C> d = c - derivative(b);
  while (b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(monic(a));
    b = divrem(b, a).first;
    c = divrem(d, a).first;
    d = c - derivative(b);
  }
  return out;
}

template <class C>
UPoly<C> squarefree_part(const UPoly<C>& p) {
  if (p.degree() < 1) return monic(p);
  return monic(divrem(p, gcd(p, derivative(p))).first);
}

}  // namespace orbisev::exactalg
