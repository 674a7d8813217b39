#pragma once

#include <stdexcept>
#include <string>

namespace hyperoct {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  DuplicateAbs,
  OutOfRange,
  ZeroEntry,
  SizeMismatch,
  CapExceeded,
  LevelMismatch,
  OddParityCell,
  EvenParityCell,
  DuplicateCell,
  WrongCount,
  NegativeEntry,
  Blocked,
  ExponentTooSmall,
  PairingViolation,
  NotCompact,
  PartTooLarge,
  NotEDiagram,
  TooManyParts,
  NonTermination,
  DivisionInexact,
  NegativeCoefficient,
  IdentityFailed,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperoct
