#include <algorithm>
#include <cstdint>
#include <random>

#include "orbisev/error.hpp"
#include "orbisev/exactalg/factor.hpp"

namespace orbisev::exactalg {

namespace {

using u64 = uint64_t;
using ModPoly = std::vector<u64>;  // ascending, trimmed

struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
  }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

  ModPoly sub(ModPoly a, const ModPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    trim(r);
    return r;
  }
  std::pair<ModPoly, ModPoly> divrem(ModPoly a, const ModPoly& b) const {
    int db = deg(b);
    if (deg(a) < db) return {{}, a};
    ModPoly q(deg(a) - db + 1, 0);
    u64 il = inv(b.back());
    for (int k = deg(a); k >= db; --k) {
      u64 f = mul(a[k], il);
      q[k - db] = f;
      if (!f) continue;
      for (int j = 0; j <= db; ++j) a[k - db + j] = sub(a[k - db + j], mul(f, b[j]));
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divrem(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    u64 il = inv(a.back());
    for (auto& c : a) c = mul(c, il);
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ModPoly derivative(const ModPoly& a) const {
    ModPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mul(i % p, a[i]));
    trim(r);
    return r;
  }
  ModPoly powmod(ModPoly b, const Integer& e, const ModPoly& m) const {
    ModPoly r{1};
    b = rem(b, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b), m);
    }
    return r;
  }
  // s*a + t*b = 1 with deg s < deg b, deg t < deg a (a, b coprime).
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divrem(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 il = inv(r0.back());
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    // Reduce s modulo b and fix t accordingly.
    auto [q, s] = divrem(s0, b);
    ModPoly t = t0;
    ModPoly qa = mul(q, a);
    if (qa.size() > t.size()) t.resize(qa.size(), 0);
    for (size_t i = 0; i < qa.size(); ++i) t[i] = add(t[i], qa[i]);
    trim(t);
    return {s, t};
  }
};

ModPoly reduce_mod_p(const IntPoly& f, u64 p) {
  ModPoly r;
  Integer pm(static_cast<unsigned long>(p));
  for (const auto& c : f) {
    Integer x = c % pm;
    if (x < 0) x += pm;
    r.push_back(x.get_ui());
  }
  Fp::trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const Fp& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly x{0, 1};
  ModPoly h = x;
  Integer pz(static_cast<unsigned long>(F.p));
  for (int i = 1; Fp::deg(f) >= 2 * i; ++i) {
    h = F.powmod(h, pz, f);
    ModPoly g = F.gcd(f, F.sub(h, x));
    if (Fp::deg(g) > 0) {
      out.emplace_back(g, i);
      f = F.divrem(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (Fp::deg(f) > 0) out.emplace_back(F.monic(f), Fp::deg(f));
  return out;
}

void equal_degree(const Fp& F, const ModPoly& g, int d, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  if (Fp::deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  while (true) {
    ModPoly a(Fp::deg(g));
    for (auto& c : a) c = rng() % F.p;
    Fp::trim(a);
    if (Fp::deg(a) < 1) continue;
    ModPoly h = F.gcd(a, g);
    if (Fp::deg(h) == 0) {
      ModPoly b = F.powmod(a, e, g);
      b = F.sub(b, ModPoly{1});
      h = F.gcd(b, g);
    }
    if (Fp::deg(h) > 0 && Fp::deg(h) < Fp::deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divrem(g, h).first, d, rng, out);
      return;
    }
  }
}

// ---- arithmetic modulo m (big) ----

void reduce_mod(IntPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  reduce_mod(r, m);
  return r;
}

IntPoly add_mod(IntPoly a, const IntPoly& b, const Integer& m, int sign = 1) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) {
    if (sign > 0)
      a[i] += b[i];
    else
      a[i] -= b[i];
  }
  reduce_mod(a, m);
  return a;
}

// Division by a monic polynomial modulo m.
std::pair<IntPoly, IntPoly> divrem_monic(IntPoly a, const IntPoly& b, const Integer& m) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {{}, a};
  IntPoly q(da - db + 1, Integer(0));
  for (int k = da; k >= db; --k) {
    Integer f = a[k] % m;
    if (f < 0) f += m;
    q[k - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
  }
  a.resize(db);
  reduce_mod(a, m);
  reduce_mod(q, m);
  return {q, a};
}

IntPoly to_int(const ModPoly& a) {
  IntPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic;
// returns the same data modulo m2 (m2 divides m^2).
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t,
                 const Integer& m2) {
  IntPoly e = add_mod(f, mul_mod(g, h, m2), m2, -1);
  auto [q, r] = divrem_monic(mul_mod(s, e, m2), h, m2);
  IntPoly g2 = add_mod(add_mod(g, mul_mod(t, e, m2), m2), mul_mod(q, g, m2), m2);
  IntPoly h2 = add_mod(h, r, m2);
  IntPoly b = add_mod(add_mod(mul_mod(s, g2, m2), mul_mod(t, h2, m2), m2), IntPoly{Integer(1)},
                      m2, -1);
  auto [c, d] = divrem_monic(mul_mod(s, b, m2), h2, m2);
  IntPoly s2 = add_mod(s, d, m2, -1);
  IntPoly t2 = add_mod(add_mod(t, mul_mod(t, b, m2), m2, -1), mul_mod(c, g2, m2), m2, -1);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts monic factors of f mod p to monic factors of f mod p^k (f monic mod p^k).
void multifactor_lift(const Fp& F, const IntPoly& f, const std::vector<ModPoly>& factors,
                      int k, const Integer& pk, std::vector<IntPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(f);
    return;
  }
  size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
  std::vector<ModPoly> right(factors.begin() + half, factors.end());
  ModPoly g0{1}, h0{1};
  for (const auto& x : left) g0 = F.mul(g0, x);
  for (const auto& x : right) h0 = F.mul(h0, x);
  auto [s0, t0] = F.bezout(g0, h0);
  IntPoly g = to_int(g0), h = to_int(h0), s = to_int(s0), t = to_int(t0);
  Integer p(static_cast<unsigned long>(F.p));
  int e = 1;
  while (e < k) {
    int e2 = std::min(2 * e, k);
    Integer m2;
    mpz_pow_ui(m2.get_mpz_t(), p.get_mpz_t(), e2);
    IntPoly fm = f;
    reduce_mod(fm, m2);
    hensel_step(fm, g, h, s, t, m2);
    e = e2;
  }
  multifactor_lift(F, g, left, k, pk, out);
  multifactor_lift(F, h, right, k, pk, out);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

IntPoly primitive(IntPoly a) {
  Integer g(0);
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& c : a) c /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact division over Z; nullopt if b does not divide a.
std::optional<IntPoly> divide_over_z(IntPoly a, const IntPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) return std::nullopt;
  IntPoly q(da - db + 1, Integer(0));
  for (int k = da; k >= db; --k) {
    if (a[k] == 0) continue;
    if (!mpz_divisible_p(a[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer f = a[k] / b.back();
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
  }
  for (int k = 0; k < db; ++k)
    if (a[k] != 0) return std::nullopt;
  return q;
}

bool canonical_int_less(const IntPoly& a, const IntPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<IntPoly> factor_squarefree_integer(const IntPoly& input) {
  IntPoly f = primitive(input);
  while (!f.empty() && f.back() == 0) f.pop_back();
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) throw std::domain_error("factoring a constant");
  if (n == 1) return {f};

  // Choose among a few admissible primes the one with fewest local factors.
  u64 best_p = 0;
  std::vector<std::pair<ModPoly, int>> best_ddf;
  int best_count = 1 << 30, tried = 0;
  for (u64 p = 3; tried < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    Integer pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(f.back().get_mpz_t(), pz.get_mpz_t())) continue;
    Fp F{p};
    ModPoly fp = reduce_mod_p(f, p);
    if (Fp::deg(F.gcd(fp, F.derivative(fp))) > 0) continue;
    ++tried;
    auto ddf = distinct_degree(F, F.monic(fp));
    int count = 0;
    for (const auto& [g, d] : ddf) count += Fp::deg(g) / d;
    if (count < best_count) {
      best_count = count;
      best_p = p;
      best_ddf = ddf;
    }
    if (count == 1) break;
  }
  if (best_p == 0) internal_error("no admissible prime for factorization");
  if (best_count == 1) return {f};

  Fp F{best_p};
  std::mt19937_64 rng(0x5eed1234u + best_p);
  std::vector<ModPoly> local;
  for (const auto& [g, d] : best_ddf) equal_degree(F, g, d, rng, local);
  std::sort(local.begin(), local.end());

  // Coefficient bound for lc(f)/lc(G) * G over all factors G of f.
  Integer norm2(0);
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  Integer p(static_cast<unsigned long>(best_p));
  Integer pk = p;
  int k = 1;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  Integer lc_inv;
  Integer lc_mod = f.back() % pk;
  if (lc_mod < 0) lc_mod += pk;
  mpz_invert(lc_inv.get_mpz_t(), lc_mod.get_mpz_t(), pk.get_mpz_t());
  IntPoly fm;
  for (const auto& c : f) fm.push_back(c * lc_inv);
  reduce_mod(fm, pk);
  std::vector<IntPoly> lifted;
  multifactor_lift(F, fm, local, k, pk, lifted);

  std::vector<IntPoly> result;
  IntPoly rest = f;
  Integer half = pk / 2;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      IntPoly cand{rest.back()};
      for (size_t i : idx) cand = mul_mod(cand, lifted[i], pk);
      for (auto& c : cand)
        if (c > half) c -= pk;
      cand = primitive(cand);
      if (auto q = divide_over_z(rest, cand)) {
        result.push_back(cand);
        rest = *q;
        for (size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + idx[i]);
        found = true;
        break;
      }
      // Next s-subset in lexicographic order.
      size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(primitive(rest));
  std::sort(result.begin(), result.end(), canonical_int_less);
  return result;
}

bool is_irreducible_over_q(const IntPoly& f) {
  IntPoly g = f;
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (g.size() < 2) return false;
  std::vector<Rational> q;
  for (const auto& c : g) q.emplace_back(c);
  UPoly<Rational> r(q);
  if (gcd(r, derivative(r)).degree() > 0) return false;
  return factor_squarefree_integer(g).size() == 1;
}

}  // namespace orbisev::exactalg
