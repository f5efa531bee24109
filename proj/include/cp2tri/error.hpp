#pragma once

#include <stdexcept>
#include <string>

namespace cp2 {

enum class ErrorKind {
  MalformedInput,
  NotAFace,
  NotPure,
  LabelCollision,
  OutOfRange,
  IncompleteMap,
  UnsupportedDimension,
  InvalidColouring,
  DegenerateQuotient,
  UnknownName,
  NotAnAutomorphism,
  Precondition,
  Inconsistent,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cp2
