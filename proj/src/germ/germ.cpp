#include "orbisev/germ/germ.hpp"

#include <map>

#include "orbisev/exactalg/factor.hpp"
#include "orbisev/exactalg/resultant.hpp"

namespace orbisev::germ {

using exactalg::FieldElement;
using exactalg::FieldRef;

GermCurve::GermCurve(BiPoly f) : f_(std::move(f)) {
  if (f_.is_zero() || !f_.constant_term().is_zero())
    throw Error(ErrorKind::InvalidArgument, "germ must vanish at the origin: " + to_string(f_));
  mult_ = static_cast<int>(f_.order_at_origin().value());
}

int multiplicity_at_origin(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "multiplicity of the zero polynomial");
  return static_cast<int>(f.order_at_origin().value());
}

namespace {

// Deterministic shear parameters: splitmix64 mapped to small nonzero ints.
struct ShearSequence {
  uint64_t state = 0x243f6a8885a308d3ULL;
  int next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    int mag = 1 + static_cast<int>(z % 16);
    return (z >> 32) & 1 ? mag : -mag;
  }
};

// F(u + s v, v).
BiPoly shear(const BiPoly& f, int s) {
  BiPoly x = BiPoly::u() + BiPoly(FieldElement(s)) * BiPoly::v();
  return exactalg::substitute(f, x, BiPoly::v());
}

// f(x0, y) as a polynomial in y.
KPoly fiber(const BiPoly& f, const FieldElement& x0) {
  std::map<int, FieldElement> acc;
  std::vector<FieldElement> pw{FieldElement(1)};
  for (const auto& [m, c] : f.terms()) {
    while (static_cast<int>(pw.size()) <= m.a) pw.push_back(pw.back() * x0);
    acc[m.b] += c * pw[m.a];
  }
  KPoly r;
  for (const auto& [b, c] : acc) r.set_coeff(b, c);
  return r;
}

// Lowest nonvanishing order of the interpolant through (i, values[i]).
int interpolated_order(const std::vector<FieldElement>& values) {
  const size_t n = values.size();
  std::vector<FieldElement> dd = values;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / FieldElement(static_cast<int>(j));
  KPoly r(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    KPoly lin(std::vector<FieldElement>{FieldElement(-static_cast<int>(i)), FieldElement(1)});
    r = r * lin + KPoly(dd[i]);
  }
  return r.low_degree();
}

}  // namespace

ExtNat fulton_intersection(const BiPoly& f, const BiPoly& g) {
  if (!f.is_zero() && !g.is_zero() && f.constant_term().is_zero() &&
      g.constant_term().is_zero() && exactalg::gcd(f, g).constant_term().is_zero())
    return ExtNat::infinity();
  return fulton_intersection_unchecked(f, g);
}

ExtNat resultant_intersection(const BiPoly& f_in, const BiPoly& g_in) {
  if (f_in.is_zero() || g_in.is_zero()) {
    const BiPoly& o = f_in.is_zero() ? g_in : f_in;
    return (o.is_zero() || o.constant_term().is_zero()) ? ExtNat::infinity() : ExtNat(0);
  }
  if (!f_in.constant_term().is_zero() || !g_in.constant_term().is_zero()) return 0;
  BiPoly d = exactalg::gcd(f_in, g_in);
  if (d.constant_term().is_zero()) return ExtNat::infinity();
  BiPoly f = f_in, g = g_in;
  if (d.total_degree() > 0) {
    f = exactalg::exact_div(f, d);
    g = exactalg::exact_div(g, d);
  }
  const int df = f.total_degree(), dg = g.total_degree();
  ShearSequence seq;
  for (int attempt = 0; attempt < 64; ++attempt) {
    int s = attempt == 0 ? 0 : seq.next();
    BiPoly fs = shear(f, s), gs = shear(g, s);
    // Leading forms must not vanish at the projection direction, so the
    // y-leading coefficients are nonzero constants.
    if (fs.degree(Var::V) != df || gs.degree(Var::V) != dg) continue;
    // The line x = 0 may meet both curves only at the origin.
    KPoly f0 = fiber(fs, FieldElement(0)), g0 = fiber(gs, FieldElement(0));
    KPoly common = exactalg::gcd(f0, g0);
    if (common.degree() != common.low_degree()) continue;
    const int bound = df * dg;
    std::vector<FieldElement> values;
    values.reserve(bound + 1);
    for (int i = 0; i <= bound; ++i) {
      FieldElement x0(i);
      values.push_back(exactalg::resultant_euclid(fiber(fs, x0), fiber(gs, x0)));
    }
    int ord = interpolated_order(values);
    if (ord < 0) internal_error("resultant vanished after removing common factors");
    return ord;
  }
  internal_error("no generic shear found");
}

ExtNat intersection_multiplicity(const BiPoly& f, const BiPoly& g, Method method) {
  switch (method) {
    case Method::Fulton:
      return fulton_intersection(f, g);
    case Method::Resultant:
      return resultant_intersection(f, g);
    case Method::Both: {
      ExtNat a = fulton_intersection(f, g);
      ExtNat b = resultant_intersection(f, g);
      if (a != b)
        internal_error("intersection paths disagree on (" + to_string(f) + ", " + to_string(g) +
                       "): " + a.to_string() + " vs " + b.to_string());
      return a;
    }
  }
  return fulton_intersection(f, g);
}

namespace {

int column_index(int a, int b) {
  int d = a + b;
  return d * (d + 1) / 2 + b;
}

// Incremental echelon basis with pivots in increasing column order.
class Echelon {
 public:
  using Row = std::map<int, FieldElement>;

  void insert(Row row) {
    while (!row.empty()) {
      auto it = rows_.find(row.begin()->first);
      if (it == rows_.end()) {
        FieldElement inv = row.begin()->second.inverse();
        for (auto& [c, x] : row) x *= inv;
        int pivot = row.begin()->first;
        rows_.emplace(pivot, std::move(row));
        return;
      }
      FieldElement f = row.begin()->second;
      for (const auto& [c, x] : it->second) {
        FieldElement y = row[c] - f * x;
        if (y.is_zero())
          row.erase(c);
        else
          row[c] = y;
      }
    }
  }
  // Number of pivots in columns < limit.
  int64_t rank_below(int limit) const {
    int64_t n = 0;
    for (const auto& [p, r] : rows_)
      if (p < limit) ++n;
    return n;
  }

 private:
  std::map<int, Row> rows_;
};

}  // namespace

QuotientDimension quotient_dimension_oracle(const BiPoly& f, const BiPoly& g, int degree_cap) {
  if (degree_cap < 1) throw Error(ErrorKind::InvalidArgument, "degree cap must be >= 1");
  QuotientDimension out;
  if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) {
    out.stabilized_at = 1;
    return out;
  }
  // Truncation levels grow geometrically up to the cap.
  for (int level = std::min(8, degree_cap);; level = std::min(2 * level, degree_cap)) {
    // Rows: u^a v^b F and u^a v^b G truncated to degree < level.
    Echelon e;
    for (const BiPoly* p : {&f, &g}) {
      if (p->is_zero()) continue;
      int ord = static_cast<int>(p->order_at_origin().value());
      for (int d = 0; d + ord < level; ++d)
        for (int a = 0; a <= d; ++a) {
          Echelon::Row row;
          for (const auto& [m, c] : p->terms()) {
            int aa = m.a + a, bb = m.b + d - a;
            if (aa + bb < level) row[column_index(aa, bb)] = c;
          }
          e.insert(std::move(row));
        }
    }
    int64_t prev = -1;
    for (int n = 1; n <= level; ++n) {
      int64_t dim = static_cast<int64_t>(n) * (n + 1) / 2 - e.rank_below(column_index(0, n - 1) + 1);
      if (dim == prev) {
        out.dimension = dim;
        out.stabilized_at = n - 1;
        return out;
      }
      prev = dim;
    }
    if (level >= degree_cap) break;
  }
  out.overflow = true;
  return out;
}

namespace {

// F_d(1, y) for the degree-d homogeneous part of f.
KPoly dehomogenize_u(const BiPoly& f, int d) {
  KPoly r;
  for (const auto& [m, c] : f.terms())
    if (m.total() == d) r.set_coeff(m.b, c);
  return r;
}

BiPoly chart_transform(const BiPoly& f, int a, Var chart) {
  BiPoly r;
  for (const auto& [m, c] : f.terms()) {
    if (chart == Var::U)
      r.add_term({m.a + m.b - a, m.b}, c);  // u^a (u v')^b / u^a
    else
      r.add_term({m.a, m.a + m.b - a}, c);  // (u' v)^a v^b / v^a
  }
  return r;
}

}  // namespace

BlowupResult blowup_strict_transforms(const std::vector<GermCurve>& curves) {
  BlowupResult out;
  std::vector<BiPoly> cones;
  for (const auto& germ : curves) {
    const BiPoly& f = germ.poly();
    const int a = germ.multiplicity();
    StrictTransform st;
    st.exceptional_multiplicity = a;
    st.chart_u = chart_transform(f, a, Var::U);
    st.chart_v = chart_transform(f, a, Var::V);
    FieldRef k = exactalg::coefficient_field(f);
    KPoly cone = dehomogenize_u(f, a);     // F1(0, y) = T(1, y)
    KPoly next = dehomogenize_u(f, a + 1); // dF1/du (0, y)
    if (cone.degree() > 0) {
      for (const auto& fac : exactalg::factor(cone, k)) {
        PointFamily pf;
        pf.chart = Var::U;
        pf.minpoly = fac.poly;
        pf.tangent_multiplicity = fac.multiplicity;
        pf.smooth = fac.multiplicity == 1 || exactalg::gcd(fac.poly, next).degree() == 0;
        st.smooth = st.smooth && pf.smooth;
        st.points.push_back(std::move(pf));
      }
    }
    // The direction u = 0 appears only in the v-chart, at u' = 0.
    if (f.coeff(0, a).is_zero()) {
      int e = a - cone.degree();
      PointFamily pf;
      pf.chart = Var::V;
      pf.minpoly = KPoly::variable();
      pf.tangent_multiplicity = e;
      pf.smooth = e == 1 || !f.coeff(0, a + 1).is_zero();
      st.smooth = st.smooth && pf.smooth;
      st.points.push_back(std::move(pf));
    }
    out.all_smooth = out.all_smooth && st.smooth;
    cones.push_back(f.initial_form());
    out.curves.push_back(std::move(st));
  }
  for (size_t i = 0; i < cones.size(); ++i)
    for (size_t j = i + 1; j < cones.size(); ++j)
      if (exactalg::gcd(cones[i], cones[j]).total_degree() > 0) {
        out.pairwise_disjoint = false;
        out.meeting_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
  return out;
}

}  // namespace orbisev::germ
