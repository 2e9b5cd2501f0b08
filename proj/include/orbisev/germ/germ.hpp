#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbisev/error.hpp"
#include "orbisev/exactalg/bipoly.hpp"
#include "orbisev/exactalg/extnat.hpp"

namespace orbisev::germ {

using exactalg::BiPoly;
using exactalg::ExtNat;
using exactalg::KPoly;
using exactalg::Monomial;
using exactalg::Poly2;
using exactalg::Var;

// A plane curve germ at the origin: F(0,0) = 0, F != 0.
class GermCurve {
 public:
  explicit GermCurve(BiPoly f);
  const BiPoly& poly() const { return f_; }
  int multiplicity() const { return mult_; }

 private:
  BiPoly f_;
  int mult_;
};

int multiplicity_at_origin(const BiPoly& f);
inline int multiplicity_at_origin(const GermCurve& f) { return f.multiplicity(); }

enum class Method { Both, Fulton, Resultant };

// I_0(F, G); infinity iff F and G share a component through the origin.
// Either argument may be a unit at the origin (then the result is 0).
ExtNat intersection_multiplicity(const BiPoly& f, const BiPoly& g, Method method = Method::Both);
inline ExtNat intersection_multiplicity(const GermCurve& f, const GermCurve& g,
                                        Method method = Method::Both) {
  return intersection_multiplicity(f.poly(), g.poly(), method);
}

// Fulton's algorithm; shared components are detected by an exact gcd first.
ExtNat fulton_intersection(const BiPoly& f, const BiPoly& g);

// Fulton's algorithm over any coefficient field C, run in the local ring
// with increasing precision. Callers must rule out common components
// through the origin beforehand (the value must be finite).
template <class C>
ExtNat fulton_intersection_unchecked(Poly2<C> f, Poly2<C> g);

ExtNat resultant_intersection(const BiPoly& f, const BiPoly& g);

struct QuotientDimension {
  bool overflow = false;
  int64_t dimension = 0;
  int stabilized_at = 0;  // N with d(N) = d(N+1)
};

// dim k[u,v]_(u,v)/(F,G) from the truncations d(N) = dim k[u,v]/((F,G) + m^N),
// N < degree_cap; d(N) = d(N+1) certifies the value.
QuotientDimension quotient_dimension_oracle(const BiPoly& f, const BiPoly& g, int degree_cap = 64);

struct PointFamily {
  // Points on the exceptional curve: roots of minpoly in the chart
  // coordinate (v' in the u-chart, u' = 0 in the v-chart).
  Var chart = Var::U;
  KPoly minpoly;
  int tangent_multiplicity = 1;
  bool smooth = true;
};

struct StrictTransform {
  int exceptional_multiplicity = 0;  // a = mult_0
  BiPoly chart_u;  // F(u, u v') / u^a in coordinates (u, v')
  BiPoly chart_v;  // F(u' v, v) / v^a in coordinates (u', v)
  std::vector<PointFamily> points;
  bool smooth = true;
};

struct BlowupResult {
  std::vector<StrictTransform> curves;
  bool all_smooth = true;
  bool pairwise_disjoint = true;
  // Pairs (i, j) whose strict transforms meet on the exceptional curve.
  std::vector<std::pair<int, int>> meeting_pairs;
};

// Smoothness and disjointness are decided with gcd tests over the working
// field, so no point ever has to be located in an extension.
BlowupResult blowup_strict_transforms(const std::vector<GermCurve>& curves);

// ---------------------------------------------------------------------------

namespace detail {

template <class C>
Poly2<C> truncate_below(const Poly2<C>& p, int degree) {
  Poly2<C> out;
  for (const auto& [m, c] : p.terms())
    if (m.total() < degree) out.add_term(m, c);
  return out;
}

// Power series a / b mod u^n, b(0) != 0.
template <class C>
exactalg::UPoly<C> series_quotient(const exactalg::UPoly<C>& a, const exactalg::UPoly<C>& b, int n) {
  std::vector<C> q(n, C(0));
  const C inv = C(1) / b.coeff(0);
  for (int i = 0; i < n; ++i) {
    C acc = a.coeff(i);
    for (int j = 1; j <= i && j <= b.degree(); ++j) acc = acc - b.coeff(j) * q[i - j];
    q[i] = acc * inv;
  }
  return exactalg::UPoly<C>(std::move(q));
}

// Local form of Fulton's reduction on f, g known modulo m^precision:
//   I(A, B) = I(A, B - q(u) A) for any power series q,
//   I(A, v B') = I(A, v) + I(A, B') with I(A, v) = ord_u A(u, 0).
// Cancelling the lowest axis term keeps degrees bounded by the precision,
// which drops by one per step. Returns nothing when the precision ran out.
template <class C>
std::optional<int64_t> fulton_local(const Poly2<C>& f_in, const Poly2<C>& g_in, int precision) {
  Poly2<C> x[2] = {truncate_below(f_in, precision), truncate_below(g_in, precision)};
  int prec[2] = {precision, precision};
  int64_t acc = 0;
  while (true) {
    if (prec[0] <= 0 || prec[1] <= 0) return std::nullopt;
    if (!is_zero(x[0].constant_term()) || !is_zero(x[1].constant_term())) return acc;
    exactalg::UPoly<C> axis[2] = {exactalg::restrict_to_axis(x[0], Var::U),
                                  exactalg::restrict_to_axis(x[1], Var::U)};
    // Orders below the precision are certain; zero axis parts are unknown.
    int ord[2];
    for (int i = 0; i < 2; ++i) ord[i] = axis[i].is_zero() ? -1 : axis[i].low_degree();
    if (ord[0] < 0 && ord[1] < 0) return std::nullopt;
    const int a = (ord[1] < 0 || (ord[0] >= 0 && ord[0] <= ord[1])) ? 0 : 1, b = 1 - a;
    const int r = ord[a];
    int next = prec[b];
    Poly2<C> y = x[b];
    if (ord[b] >= 0) {
      const int s = ord[b];
      next = std::min(prec[b], prec[a] + s - r);
      std::vector<C> ca, cb;
      for (int i = r; i <= axis[a].degree(); ++i) ca.push_back(axis[a].coeff(i));
      for (int i = r; i <= axis[b].degree(); ++i) cb.push_back(axis[b].coeff(i));
      auto q = series_quotient(exactalg::UPoly<C>(std::move(cb)), exactalg::UPoly<C>(std::move(ca)),
                               next - r);
      Poly2<C> qa;
      for (int i = 0; i <= q.degree(); ++i)
        if (!is_zero(q.coeff(i)))
          for (const auto& [m, c] : x[a].terms())
            if (m.total() + i < next) qa.add_term({m.a + i, m.b}, q.coeff(i) * c);
      y = truncate_below(y - qa, next);
    }
    Poly2<C> shifted;
    for (const auto& [m, c] : y.terms()) {
      if (m.b == 0) {
        if (m.a < next) return std::nullopt;  // cannot happen; keeps the invariant honest
        continue;
      }
      shifted.add_term({m.a, m.b - 1}, c);
    }
    x[b] = std::move(shifted);
    prec[b] = next - 1;
    acc += r;
  }
}

}  // namespace detail

template <class C>
ExtNat fulton_intersection_unchecked(Poly2<C> f, Poly2<C> g) {
  if (f.is_zero() || g.is_zero()) {
    const Poly2<C>& other = f.is_zero() ? g : f;
    if (other.is_zero() || is_zero(other.constant_term())) return ExtNat::infinity();
    return 0;
  }
  for (int precision = 16; precision <= (1 << 14); precision *= 2)
    if (auto r = detail::fulton_local(f, g, precision)) return *r;
  internal_error("local Fulton reduction did not terminate");
}

}  // namespace orbisev::germ
