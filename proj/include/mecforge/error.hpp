#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mecforge {

enum class ErrorKind {
  NotPrime,
  NotAdmissible,
  ZeroInverse,
  ZeroInput,
  NonResidue,
  ZeroParameter,
  TooLarge,
  DuplicateResidue,
  OutOfRange,
  WrongSize,
  EmptySet,
  BadModulus,
  BadShift,
  NotRepresentative,
  NotPowerOfTwo,
  UnsupportedSize,
  SizeMismatch,
  EmptySequence,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace mecforge
