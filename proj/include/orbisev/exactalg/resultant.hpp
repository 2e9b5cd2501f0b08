#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "orbisev/exactalg/upoly.hpp"

namespace orbisev::exactalg {

// Fraction-free Gaussian elimination (Bareiss) over an integral domain.
template <class R>
R determinant(std::vector<std::vector<R>> m) {
  const size_t n = m.size();
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return R(0);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  R d = m[n - 1][n - 1];
  return negate ? -d : d;
}

// Sylvester matrix with descending coefficients; deg q rows of p on top,
// then deg p rows of q.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const UPoly<R>& p, const UPoly<R>& q) {
  const int m = p.degree(), n = q.degree();
  const int size = m + n;
  std::vector<std::vector<R>> s(size, std::vector<R>(size, R(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = p.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = q.coeff(n - j);
  return s;
}

// Res(p, q) = det Sylvester(p, q) = lc(p)^deg q * prod_{p(a)=0} q(a).
// Res(q, p) = (-1)^(deg p * deg q) Res(p, q).
template <class R>
R resultant(const UPoly<R>& p, const UPoly<R>& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return R(1);
  return determinant(sylvester_matrix(p, q));
}

// Same value over a field, by the Euclidean recurrence
// Res(p, q) = (-1)^(deg p deg q) lc(q)^(deg p - deg r) Res(q, r), r = p mod q.
template <class F>
F resultant_euclid(UPoly<F> p, UPoly<F> q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
  F acc(1);
  while (true) {
    const int dp = p.degree(), dq = q.degree();
    if (dq == 0) {
      F c = q.lc();
      F r(1);
      for (int i = 0; i < dp; ++i) r = r * c;
      return acc * r;
    }
    if (dp == 0) {
      F c = p.lc();
      F r(1);
      for (int i = 0; i < dq; ++i) r = r * c;
      return acc * r;
    }
    UPoly<F> r = p % q;
    if (r.is_zero()) return F(0);
    if ((dp % 2 == 1) && (dq % 2 == 1)) acc = -acc;
    F l = q.lc();
    for (int i = 0; i < dp - r.degree(); ++i) acc = acc * l;
    p = std::move(q);
    q = std::move(r);
  }
}

}  // namespace orbisev::exactalg
