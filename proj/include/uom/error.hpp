#pragma once

#include <stdexcept>
#include <string>

namespace uom {

enum class ErrorCode {
  RaggedRows,
  BadToken,
  EmptyInput,
  LengthMismatch,
  NotOrthogonal,
  NotUOM,
  VariableCollision,
  WidthMismatch,
  EvenN,
  BadFamily,
  SplitMismatch,
  NotAnExtension,
  DependentPair,
  NotPresent,
  UnknownEntry,
  UnknownVariable,
  NotOrthogonalSet,
  NonHermitian,
  GenericityFailure,
  BudgetExceeded,
  UnderConstrained,
  Unsupported,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace uom
