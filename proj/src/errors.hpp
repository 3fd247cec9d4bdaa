#pragma once

#include <stdexcept>
#include <string>

namespace specgap {

// Every failure the library can signal. The C API maps these onto sg_status.
enum class Err {
  LoopEdge,
  IndexOutOfRange,
  ParseError,
  UnknownKind,
  IncompatibleAttachment,
  NotQuarticAfterGlue,
  OrderTooSmall,
  GrammarViolation,
  ConvergenceFailure,
  ZeroVector,
  ConstantVector,
  NotRegular,
  Disconnected,
  NotAPartition,
  DimensionMismatch,
  NotPalindromic,
  SearchSpaceExceeded,
  FitViolated,
  CellNotConstant,
  UnknownFormula,
  MuOutOfRange,
  GadgetNotFound,
  HypothesisUnmet,
  OrderCapExceeded,
  ClaimMismatch,
  InvalidArgument,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, std::string(err_name(code)) + ": " + message);
}

}  // namespace specgap
