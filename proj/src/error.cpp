#include "cfauto/error.hpp"

namespace cfauto {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedFieldSize: return "UnsupportedFieldSize";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::InvertZeroSeries: return "InvertZeroSeries";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::SymbolUniverseMismatch: return "SymbolUniverseMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ConstantLetterAssignment: return "ConstantLetterAssignment";
    case ErrorCode::ZeroDenominatorAfterEval: return "ZeroDenominatorAfterEval";
    case ErrorCode::NonSquareMatrix: return "NonSquareMatrix";
    case ErrorCode::InvalidBackbone: return "InvalidBackbone";
    case ErrorCode::WordTooLarge: return "WordTooLarge";
    case ErrorCode::LevelTooLarge: return "LevelTooLarge";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::DegenerateDeterminant: return "DegenerateDeterminant";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace cfauto
