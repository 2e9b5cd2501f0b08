#pragma once

#include <gmpxx.h>

#include <string>

namespace orbisev::exactalg {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace orbisev::exactalg
