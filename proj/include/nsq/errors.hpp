#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsq {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  GcdNotOne,
  NotAMember,
  NotCoprimePart,
  NoMatchingRow,
  NegativeNumerator,
  NonCoprimeFactors,
  NotInvertible,
  PreconditionUnmet,
  DivisionByZeroPoly,
  PoleAtZero,
  CapExceeded,
  CertificationFailed,
  InternalMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nsq
