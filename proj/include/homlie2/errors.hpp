#pragma once

#include <stdexcept>
#include <string>

namespace homlie2 {

enum class ErrorKind {
  SpecMismatch,
  Shape,
  DivisionByZero,
  Parity,
  NotInvertible,
  InvalidMorphism,
  InvalidIdeal,
  InvalidRepresentation,
  Incompatibility,
  FixedPointViolation,
  NotACochain,
  NotClosed,
  ComplexViolation,
  NotASubspace,
  ConstraintViolation,
  TooLarge,
  Unsupported,
  Format,
};

const char* to_string(ErrorKind k);

// Every library failure is reported through this type; `kind` is stable and
// machine readable, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace homlie2
