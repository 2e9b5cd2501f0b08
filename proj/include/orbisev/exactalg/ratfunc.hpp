#pragma once

#include <string>

#include "orbisev/exactalg/upoly.hpp"

namespace orbisev::exactalg {

// Element of K(w): reduced fraction with monic denominator.
template <class C>
class RatFunc {
 public:
  RatFunc() : den_(C(1)) {}
  RatFunc(int c) : num_(C(c)), den_(C(1)) {}
  RatFunc(const C& c) : num_(c), den_(C(1)) {}
  RatFunc(UPoly<C> n) : num_(std::move(n)), den_(C(1)) {}
  RatFunc(UPoly<C> n, UPoly<C> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  const UPoly<C>& numerator() const { return num_; }
  const UPoly<C>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly<C>(C(1));
      return;
    }
    UPoly<C> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
    C l = den_.lc();
    if (!(l == C(1))) {
      C il = C(1) / l;
      num_ = il * num_;
      den_ = il * den_;
    }
  }

  UPoly<C> num_, den_;
};

template <class C>
bool is_zero(const RatFunc<C>& r) {
  return r.is_zero();
}

template <class C>
RatFunc<C> exact_div(const RatFunc<C>& a, const RatFunc<C>& b) {
  return a / b;
}

}  // namespace orbisev::exactalg
