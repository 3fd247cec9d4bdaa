#include "errors.hpp"

namespace specgap {

const char* err_name(Err e) {
  switch (e) {
    case Err::LoopEdge: return "LoopEdge";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::ParseError: return "ParseError";
    case Err::UnknownKind: return "UnknownKind";
    case Err::IncompatibleAttachment: return "IncompatibleAttachment";
    case Err::NotQuarticAfterGlue: return "NotQuarticAfterGlue";
    case Err::OrderTooSmall: return "OrderTooSmall";
    case Err::GrammarViolation: return "GrammarViolation";
    case Err::ConvergenceFailure: return "ConvergenceFailure";
    case Err::ZeroVector: return "ZeroVector";
    case Err::ConstantVector: return "ConstantVector";
    case Err::NotRegular: return "NotRegular";
    case Err::Disconnected: return "Disconnected";
    case Err::NotAPartition: return "NotAPartition";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotPalindromic: return "NotPalindromic";
    case Err::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case Err::FitViolated: return "FitViolated";
    case Err::CellNotConstant: return "CellNotConstant";
    case Err::UnknownFormula: return "UnknownFormula";
    case Err::MuOutOfRange: return "MuOutOfRange";
    case Err::GadgetNotFound: return "GadgetNotFound";
    case Err::HypothesisUnmet: return "HypothesisUnmet";
    case Err::OrderCapExceeded: return "OrderCapExceeded";
    case Err::ClaimMismatch: return "ClaimMismatch";
    case Err::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace specgap
