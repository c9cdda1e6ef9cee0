#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfauto {

enum class ErrorCode {
  UnsupportedFieldSize,
  FieldMismatch,
  DivisionByZeroPoly,
  InvertZeroSeries,
  PrecisionTooLow,
  SymbolUniverseMismatch,
  ZeroDenominator,
  ConstantLetterAssignment,
  ZeroDenominatorAfterEval,
  NonSquareMatrix,
  InvalidBackbone,
  WordTooLarge,
  LevelTooLarge,
  InvalidIndex,
  DegenerateDeterminant,
  ParseError,
  ExponentOverflow,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every library failure surfaces as this exception; what() is
// "<CodeName>: <detail>" so it can be echoed verbatim on one line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace cfauto
