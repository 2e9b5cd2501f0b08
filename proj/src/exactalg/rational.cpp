#include "orbisev/exactalg/rational.hpp"

#include <stdexcept>

namespace orbisev::exactalg {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational literal: " + text);
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace orbisev::exactalg
