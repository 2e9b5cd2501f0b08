#include "orbisev/puiseux/puiseux.hpp"

#include <algorithm>
#include <numeric>

#include "orbisev/exactalg/factor.hpp"

namespace orbisev::puiseux {

using exactalg::Integer;
using exactalg::Var;

namespace {

// Largest Bezout bound worth reaching by precision alone.
constexpr int64_t kBezoutPrecisionCap = 400;

int field_degree(const FieldRef& k) { return k ? k->degree() : 1; }

KPoly mul_trunc(const KPoly& a, const KPoly& b, int n) {
  if (a.is_zero() || b.is_zero() || n <= 0) return KPoly();
  const int da = std::min(a.degree(), n - 1), db = std::min(b.degree(), n - 1);
  std::vector<FieldElement> r(std::min(da + db, n - 1) + 1, FieldElement(0));
  for (int i = 0; i <= da; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= db && i + j < n; ++j)
      if (!b.coeff(j).is_zero()) r[i + j] += a.coeff(i) * b.coeff(j);
  }
  return KPoly(std::move(r));
}

// 1/d modulo t^n, d(0) != 0.
KPoly inverse_series(const KPoly& d, int n) {
  const FieldElement inv0 = d.coeff(0).inverse();
  std::vector<FieldElement> r(n, FieldElement(0));
  if (n > 0) r[0] = inv0;
  for (int k = 1; k < n; ++k) {
    FieldElement s(0);
    for (int i = 1; i <= std::min(k, d.degree()); ++i) s += d.coeff(i) * r[k - i];
    r[k] = -s * inv0;
  }
  return KPoly(std::move(r));
}

// rows[j](T) = coefficient of Y^j, with T stored as u and Y as v.
std::vector<KPoly> y_rows(const BiPoly& f) {
  std::vector<KPoly> rows(std::max(f.degree(Var::V), 0) + 1);
  for (const auto& [m, c] : f.terms()) rows[m.b].set_coeff(m.a, c);
  return rows;
}

KPoly horner(const std::vector<KPoly>& rows, const KPoly& y, int n) {
  KPoly acc;
  for (size_t j = rows.size(); j-- > 0;) acc = mul_trunc(acc, y, n) + rows[j].truncated(n);
  return acc;
}

// The series y(T) mod T^n with tail(T, y) = 0, y(0) = 0, by Newton iteration.
KPoly solve_tail(const BiPoly& tail, int n) {
  if (n <= 1) return KPoly();
  auto rows = y_rows(tail);
  auto drows = y_rows(exactalg::derivative(tail, Var::V));
  KPoly y;
  for (int prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    KPoly r = horner(rows, y, prec);
    KPoly d = horner(drows, y, prec);
    y -= mul_trunc(r, inverse_series(d, prec), prec);
  }
  return y;
}

// Vertices of the lower-left boundary from `start` down to the lowest row.
std::vector<Monomial> lower_hull(const std::vector<Monomial>& pts, Monomial start) {
  std::vector<Monomial> out{start};
  Monomial c = start;
  while (true) {
    const Monomial* best = nullptr;
    for (const auto& p : pts) {
      if (p.b >= c.b) continue;
      if (!best) {
        best = &p;
        continue;
      }
      // Compare (p.a - c.a)/(c.b - p.b) with the best so far.
      int64_t lhs = int64_t(p.a - c.a) * (c.b - best->b);
      int64_t rhs = int64_t(best->a - c.a) * (c.b - p.b);
      if (lhs < rhs || (lhs == rhs && p.b < best->b)) best = &p;
    }
    if (!best) return out;
    c = *best;
    out.push_back(c);
  }
}

std::vector<Monomial> support(const BiPoly& f) {
  std::vector<Monomial> pts;
  for (const auto& [m, c] : f.terms()) pts.push_back(m);
  return pts;
}

BiPoly swap_uv(const BiPoly& f) {
  BiPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term({m.b, m.a}, c);
  return r;
}

// Duval state: Fk(T, Y) obtained from F by X = cx T^E, Y = head + cy T^M Y.
struct Work {
  FieldRef field;
  FieldElement base_image;
  BiPoly fk;
  bool parameter_is_u = true;
  FieldElement cx{1};
  int exponent = 1;
  KPoly head;
  FieldElement cy{1};
  int tail_shift = 0;
};

FieldElement to_field(const FieldElement& x, const FieldRef& l, const FieldElement& gen_image) {
  return exactalg::embed(x, l, gen_image);
}

void move_to(Work& w, const FieldRef& l, const FieldElement& gen_image) {
  auto m = [&](const FieldElement& x) { return to_field(x, l, gen_image); };
  w.fk = exactalg::map_coefficients(w.fk, m);
  w.cx = m(w.cx);
  w.cy = m(w.cy);
  std::vector<FieldElement> h;
  for (const auto& c : w.head.coeffs()) h.push_back(m(c));
  w.head = KPoly(std::move(h));
  w.base_image = m(w.base_image);
  w.field = l;
}

FieldElement signed_pow(const FieldElement& x, int k) {
  return k >= 0 ? x.pow(k) : x.inverse().pow(-k);
}

struct Context {
  FieldRef base;
  std::shared_ptr<const BiPoly> germ;
  int order;
  bool allow_extensions;
  std::vector<PuiseuxBranch> out;
};

void fill_series(PuiseuxBranch& b, int n) {
  b.order = n;
  KPoly x = KPoly::monomial(b.cx, b.exponent).truncated(n + 1);
  KPoly y = b.head.truncated(n + 1);
  const int need = n + 1 - b.tail_shift;
  if (need > 0) y += (b.cy * solve_tail(b.tail, need)).shifted(b.tail_shift);
  b.u_series = b.parameter_is_u ? x : y;
  b.v_series = b.parameter_is_u ? y : x;
}

void finalize(Context& ctx, const Work& w, const BiPoly& tail) {
  PuiseuxBranch b;
  b.base_field = ctx.base;
  b.field = w.field;
  b.base_image = w.base_image;
  b.conjugacy_degree = field_degree(w.field) / field_degree(ctx.base);
  b.parameter_is_u = w.parameter_is_u;
  b.exponent = w.exponent;
  b.cx = w.cx;
  b.head = w.head;
  b.cy = w.cy;
  b.tail_shift = w.tail_shift;
  b.tail = tail;
  b.germ = ctx.germ;
  fill_series(b, std::max(ctx.order, b.exponent));
  const KPoly& y = b.parameter_is_u ? b.v_series : b.u_series;
  int oy = y.low_degree();
  b.multiplicity = oy < 0 ? b.exponent : std::min(b.exponent, oy);
  ctx.out.push_back(std::move(b));
}

void expand(Context& ctx, Work w);

// One Newton-polygon edge from (i1, j1) to (i2, j2) and one irreducible factor
// phi of its edge polynomial.
void descend(Context& ctx, const Work& parent, Monomial s, Monomial e, const KPoly& phi) {
  const int di = e.a - s.a, dj = s.b - e.b;
  const int g = std::gcd(di, dj);
  const int q = di / g, p = dj / g;
  Work w = parent;
  FieldElement xi;
  if (phi.degree() == 1) {
    xi = -phi.coeff(0) / phi.coeff(1);
  } else {
    if (!ctx.allow_extensions) throw ExtensionRequired(exactalg::to_string(phi, "z"));
    auto ext = exactalg::adjoin_root(w.field, phi);
    move_to(w, ext.field, ext.base_image);
    xi = ext.root;
  }
  // q alpha - p beta = 1 with 0 <= alpha < p.
  int alpha = 0;
  while ((q * alpha - 1) % p != 0) ++alpha;
  const int beta = (q * alpha - 1) / p;
  const FieldElement lambda = signed_pow(xi, alpha), mu = signed_pow(xi, beta);
  const int level = p * s.a + q * s.b;

  // Fk(lambda T^p, T^q (mu + Y)) / T^level.
  std::vector<FieldElement> lp{FieldElement(1)}, mp{FieldElement(1)};
  BiPoly next;
  for (const auto& [m, c] : w.fk.terms()) {
    while (static_cast<int>(lp.size()) <= m.a) lp.push_back(lp.back() * lambda);
    while (static_cast<int>(mp.size()) <= m.b) mp.push_back(mp.back() * mu);
    const int shift = p * m.a + q * m.b - level;
    FieldElement base = c * lp[m.a];
    Integer binom = 1;
    for (int r = 0; r <= m.b; ++r) {
      next.add_term({shift, r}, base * FieldElement(binom) * mp[m.b - r]);
      binom = binom * (m.b - r) / (r + 1);
    }
  }

  std::vector<FieldElement> h;
  for (int i = 0; i <= w.head.degree(); ++i) {
    const FieldElement c = w.head.coeff(i) * signed_pow(lambda, i);
    if (static_cast<int>(h.size()) <= p * i) h.resize(p * i + 1, FieldElement(0));
    h[p * i] = c;
  }
  KPoly head(std::move(h));
  const FieldElement cy = w.cy * signed_pow(lambda, w.tail_shift);
  const int shift = p * w.tail_shift + q;
  head += KPoly::monomial(cy * mu, shift);

  w.fk = std::move(next);
  w.cx = w.cx * signed_pow(lambda, w.exponent);
  w.exponent *= p;
  w.head = std::move(head);
  w.cy = cy;
  w.tail_shift = shift;
  expand(ctx, std::move(w));
}

void expand(Context& ctx, Work w) {
  int j0 = -1;
  bool y_divides = true;
  for (const auto& [m, c] : w.fk.terms()) {
    if (m.a == 0 && (j0 < 0 || m.b < j0)) j0 = m.b;
    if (m.b == 0) y_divides = false;
  }
  if (j0 < 1) internal_error("Duval state lost its point at the origin");
  if (j0 == 1) {
    finalize(ctx, w, w.fk);
    return;
  }
  if (y_divides) {
    finalize(ctx, w, BiPoly::v());
    BiPoly r;
    for (const auto& [m, c] : w.fk.terms()) r.add_term({m.a, m.b - 1}, c);
    w.fk = std::move(r);
    if (--j0 == 1) {
      finalize(ctx, w, w.fk);
      return;
    }
  }
  auto hull = lower_hull(support(w.fk), {0, j0});
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    const Monomial s = hull[k], e = hull[k + 1];
    const int g = std::gcd(e.a - s.a, s.b - e.b);
    const int q = (e.a - s.a) / g, p = (s.b - e.b) / g;
    KPoly phi;
    for (int i = 0; i <= g; ++i) phi.set_coeff(i, w.fk.coeff(s.a + q * i, s.b - p * i));
    for (const auto& fac : exactalg::factor(phi, w.field)) descend(ctx, w, s, e, fac.poly);
  }
}

}  // namespace

int default_order(const BiPoly& f) { return std::max(8, 2 * f.total_degree()); }

NewtonPolygon newton_polygon(const germ::GermCurve& f) {
  auto pts = support(f.poly());
  Monomial start = pts.front();
  for (const auto& m : pts)
    if (m.a < start.a || (m.a == start.a && m.b < start.b)) start = m;
  auto hull = lower_hull(pts, start);
  NewtonPolygon out;
  if (hull.size() == 1) {
    out.segments.push_back({start, start, Rational(0)});
    return out;
  }
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    const Monomial s = hull[k], e = hull[k + 1];
    out.segments.push_back({s, e, Rational(Integer(s.b - e.b), Integer(e.a - s.a))});
    out.segments.back().steepness.canonicalize();
  }
  return out;
}

std::vector<PuiseuxBranch> branches(const germ::GermCurve& g, const BranchOptions& options) {
  const BiPoly& f = g.poly();
  FieldRef kf = exactalg::coefficient_field(f);
  FieldRef base = options.explicit_base ? options.base_field : kf;
  if (kf && !exactalg::same_field(kf, base))
    throw Error(ErrorKind::FieldMismatch, "germ coefficients are not in the base field");
  BiPoly rep = exactalg::gcd(exactalg::gcd(f, exactalg::derivative(f, Var::U)),
                             exactalg::derivative(f, Var::V));
  if (rep.constant_term().is_zero())
    throw Error(ErrorKind::InvalidArgument, "germ is not squarefree: " + to_string(f));

  Context ctx{base, std::make_shared<const BiPoly>(f),
              options.order > 0 ? options.order : default_order(f), options.allow_extensions, {}};
  Work w;
  w.field = base;
  w.base_image = base ? FieldElement::generator(base) : FieldElement(0);
  const bool u_divides = f.low_degree(Var::U) > 0, v_divides = f.low_degree(Var::V) > 0;
  if (!u_divides) {
    w.fk = f;
    expand(ctx, w);
  } else if (!v_divides) {
    w.fk = swap_uv(f);
    w.parameter_is_u = false;
    expand(ctx, w);
  } else {
    // Both axes are components: emit them and continue with the rest.
    Work axis = w;
    axis.parameter_is_u = false;
    finalize(ctx, axis, BiPoly::v());
    axis.parameter_is_u = true;
    finalize(ctx, axis, BiPoly::v());
    BiPoly rest = f.shifted(-1, -1);
    if (rest.constant_term().is_zero()) {
      w.fk = rest;
      expand(ctx, w);
    }
  }
  return std::move(ctx.out);
}

PuiseuxBranch refine(const PuiseuxBranch& b, int order) {
  if (order <= b.order) return b;
  PuiseuxBranch r = b;
  fill_series(r, order);
  return r;
}

BranchEvaluator::BranchEvaluator(PuiseuxBranch b) : b_(std::move(b)) {}

void BranchEvaluator::ensure_order(int n) {
  if (n > b_.order) {
    b_ = refine(b_, n);
    upow_.clear();
    vpow_.clear();
  }
}

BiPoly BranchEvaluator::to_branch_field(const BiPoly& h) const {
  FieldRef kh = exactalg::coefficient_field(h);
  if (kh && !exactalg::same_field(kh, b_.base_field) && !exactalg::same_field(kh, b_.field))
    throw Error(ErrorKind::FieldMismatch, "polynomial is not over the branch base field");
  if (kh && exactalg::same_field(kh, b_.field)) return h;
  return exactalg::map_coefficients(
      h, [&](const FieldElement& c) { return exactalg::embed(c, b_.field, b_.base_image); });
}

KPoly BranchEvaluator::compose(const BiPoly& h) {
  const int n = b_.order + 1;
  auto power = [&](std::vector<KPoly>& cache, const KPoly& s, int k) -> const KPoly& {
    if (cache.empty()) cache.push_back(KPoly(FieldElement(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(mul_trunc(cache.back(), s, n));
    return cache[k];
  };
  KPoly acc;
  for (const auto& [m, c] : h.terms()) {
    // Terms of order > n vanish modulo t^n.
    if (m.a * std::max(b_.u_series.low_degree(), 1) + m.b * std::max(b_.v_series.low_degree(), 1) >= n &&
        !b_.u_series.is_zero() && !b_.v_series.is_zero())
      continue;
    const KPoly& up = power(upow_, b_.u_series, m.a);
    const KPoly& vp = power(vpow_, b_.v_series, m.b);
    acc += c * mul_trunc(up, vp, n);
  }
  return acc;
}

ExtNat BranchEvaluator::order(const BiPoly& h_in) {
  if (h_in.is_zero()) return ExtNat::infinity();
  if (!h_in.constant_term().is_zero()) return 0;
  BiPoly h = to_branch_field(h_in);
  KPoly s = compose(h);
  // A nonvanishing H has order at most I_0(C, H) <= deg F * deg H (Bezout,
  // C the curve of the branch), so a zero composition beyond that
  // precision certifies infinite order without any gcd.
  const int64_t bezout = static_cast<int64_t>(b_.germ->total_degree()) * h_in.total_degree();
  if (bezout <= kBezoutPrecisionCap) {
    while (s.is_zero() && b_.order < bezout) {
      ensure_order(static_cast<int>(std::min<int64_t>(2 * b_.order + 1, bezout)));
      s = compose(h);
    }
    return s.is_zero() ? ExtNat::infinity() : ExtNat(s.low_degree());
  }
  for (int i = 0; i < 2 && s.is_zero(); ++i) {
    ensure_order(2 * b_.order + 1);
    s = compose(h);
  }
  if (!s.is_zero()) return s.low_degree();

  // Certification: bound the order by an intersection number with the part
  // of the germ that cannot contain this branch.
  if (exactalg::coefficient_field(h_in) && exactalg::same_field(exactalg::coefficient_field(h_in), b_.field) &&
      !exactalg::same_field(b_.field, b_.base_field))
    throw Error(ErrorKind::FieldMismatch, "certification needs H over the base field");
  const BiPoly& f = *b_.germ;
  BiPoly d = exactalg::gcd(f, h_in);
  if (!d.constant_term().is_zero()) {
    // No component through the origin in common: the order is finite, so
    // doubling the precision terminates.
    while (s.is_zero()) {
      ensure_order(2 * b_.order + 1);
      s = compose(h);
    }
    return s.low_degree();
  }
  int64_t bound;
  {
    BiPoly rest = exactalg::exact_div(f, d);
    ExtNat sep = germ::intersection_multiplicity(rest, d, germ::Method::Fulton);
    ensure_order(static_cast<int>(sep.value()) + 1);
    KPoly sd = compose(to_branch_field(d));
    if (sd.is_zero()) return ExtNat::infinity();
    bound = germ::intersection_multiplicity(rest, h_in, germ::Method::Fulton).value();
  }
  ensure_order(static_cast<int>(bound) + 1);
  s = compose(h);
  if (s.is_zero()) internal_error("branch order exceeds its intersection bound");
  return s.low_degree();
}

bool BranchEvaluator::lies_on(const BiPoly& part, const BiPoly& rest) {
  const BiPoly p = to_branch_field(part), r = to_branch_field(rest);
  for (int round = 0; round < 40; ++round) {
    if (!compose(p).is_zero()) return false;
    if (!compose(r).is_zero()) return true;
    ensure_order(2 * b_.order + 1);
  }
  internal_error("branch lies on neither factor");
}

ExtNat branch_order(const PuiseuxBranch& b, const BiPoly& h) {
  BranchEvaluator ev(b);
  return ev.order(h);
}

}  // namespace orbisev::puiseux
