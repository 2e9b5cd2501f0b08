#include "orbisev/error.hpp"

namespace orbisev {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegenerateWedge: return "DegenerateWedge";
    case ErrorKind::TypeZeroBranch: return "TypeZeroBranch";
    case ErrorKind::LiftUndefined: return "LiftUndefined";
    case ErrorKind::ImproperCycle: return "ImproperCycle";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NonIntegralChi: return "NonIntegralChi";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::ExtensionRequired: return "ExtensionRequired";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace orbisev
