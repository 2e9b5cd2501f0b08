#pragma once

#include <string>

#include "orbisev/exactalg/bipoly.hpp"

namespace orbisev::cli {

using exactalg::BiPoly;
using exactalg::FieldRef;

// "Q", "Q(i)", "cyclo:N" or "min:<monic integer polynomial in z>".
// Q(i) is Q(zeta_4) with its generator named I. Errors: SyntaxError,
// UnknownSymbol, InvalidArgument, UnsupportedField.
FieldRef parse_field(const std::string& text);

// Canonical name accepted back by parse_field.
std::string field_name(const FieldRef& k);

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*' power) | ('/' integer))*
//   power  := atom ['^' integer]
//   atom   := integer | symbol | '(' expr ')'
// Symbols: u, v, the field generator, and I when the field contains a
// square root of -1. Whitespace is ignored. Errors carry the byte offset:
// SyntaxError for malformed input, UnknownSymbol for other identifiers.
BiPoly parse_poly(const std::string& text, const FieldRef& field = nullptr);

}  // namespace orbisev::cli
