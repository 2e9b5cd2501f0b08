#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace orbisev::exactalg {

// A natural number or infinity. Orders of vanishing and intersection numbers
// both live here; infinity compares above every finite value.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(int64_t v) : value_(v) {}

  static constexpr ExtNat infinity() {
    ExtNat r;
    r.value_ = kInf;
    return r;
  }

  constexpr bool is_finite() const { return value_ != kInf; }
  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr int64_t value() const { return value_; }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtNat(a.value_ + b.value_);
  }
  ExtNat& operator+=(ExtNat o) { return *this = *this + o; }
  friend constexpr ExtNat operator*(int64_t k, ExtNat a) {
    if (a.is_infinite()) return k == 0 ? ExtNat(0) : infinity();
    return ExtNat(k * a.value_);
  }

  friend constexpr auto operator<=>(ExtNat a, ExtNat b) = default;
  friend constexpr bool operator==(ExtNat a, ExtNat b) = default;

  std::string to_string() const {
    return is_finite() ? std::to_string(value_) : std::string("inf");
  }
  friend std::ostream& operator<<(std::ostream& os, ExtNat a) {
    return os << a.to_string();
  }

 private:
  static constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
  int64_t value_ = 0;
};

inline ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }

}  // namespace orbisev::exactalg
