#pragma once

// Seeded generators for property tests. splitmix64 keeps the streams stable
// across standard library versions.

#include <cstdint>
#include <ostream>
#include <vector>

#include "orbisev/exactalg/bipoly.hpp"

namespace orbisev::exactalg {
inline void PrintTo(const BiPoly& p, std::ostream* os) { *os << to_string(p); }
}  // namespace orbisev::exactalg

namespace testgen {

using orbisev::exactalg::BiPoly;
using orbisev::exactalg::FieldElement;
using orbisev::exactalg::FieldRef;
using orbisev::exactalg::Rational;

struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(next() % uint64_t(hi - lo + 1)); }
  bool coin(int num, int den) { return range(1, den) <= num; }
};

inline FieldElement small_scalar(Rng& r, const FieldRef& k = nullptr) {
  if (k && r.coin(1, 3)) {
    std::vector<Rational> c;
    for (int i = 0; i < k->degree(); ++i) c.emplace_back(r.range(-2, 2));
    return FieldElement::from_coefficients(k, c);
  }
  int x = r.range(-3, 3);
  return FieldElement(x);
}

// Random polynomial of total degree <= deg with about `terms` terms; zero
// constant term when through_origin.
inline BiPoly random_poly(Rng& r, int deg, int terms, bool through_origin,
                          const FieldRef& k = nullptr) {
  BiPoly p;
  for (int i = 0; i < terms; ++i) {
    int d = r.range(through_origin ? 1 : 0, deg);
    int a = r.range(0, d);
    p.add_term({a, d - a}, small_scalar(r, k));
  }
  return p;
}

}  // namespace testgen
