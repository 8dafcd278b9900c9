#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace actlab {

// Discriminates the first violated precondition or axiom detected by a
// validating constructor or operation.
enum class ErrorCode {
  IndexOutOfRange,
  NotAssociative,
  IdentityLawFails,
  UnitLawFails,
  ActionNotAssociative,
  NotEquivariant,
  NotClosed,
  MixedMonoids,
  MismatchedEndpoints,
  NotEpi,
  NotMono,
  NotRightOre,
  NotWeaklyTorsionFree,
  NotDivisible,
  ClassMembershipFails,
  BoundExceeded,
  ParseError,
  InvalidArgument,
};

// All failures carry a code plus the element indices that witness the
// violation, so callers can replay the offending instance.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg, std::vector<int> witness = {})
      : std::runtime_error(std::move(msg)),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

class ParseError : public Error {
 public:
  ParseError(int line, std::string msg)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace actlab
