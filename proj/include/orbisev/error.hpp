#pragma once

#include <stdexcept>
#include <string>

namespace orbisev {

enum class ErrorKind {
  FieldMismatch,
  DegenerateWedge,
  TypeZeroBranch,
  LiftUndefined,
  ImproperCycle,
  NotInvariant,
  NonIntegralChi,
  UnsupportedField,
  ExtensionRequired,
  SyntaxError,
  UnknownSymbol,
  InvalidArgument,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Carries the offending minimal polynomial (canonical text) when automatic
// field extension is switched off.
class ExtensionRequired : public Error {
 public:
  explicit ExtensionRequired(std::string minimal_polynomial)
      : Error(ErrorKind::ExtensionRequired,
              "field extension required by " + minimal_polynomial),
        minpoly_(std::move(minimal_polynomial)) {}

  const std::string& minimal_polynomial() const { return minpoly_; }

 private:
  std::string minpoly_;
};

// Parser errors remember the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, size_t position, const std::string& message)
      : Error(kind, message + " at position " + std::to_string(position)),
        position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

[[noreturn]] inline void internal_error(const std::string& what) {
  throw Error(ErrorKind::Internal, what);
}

}  // namespace orbisev
