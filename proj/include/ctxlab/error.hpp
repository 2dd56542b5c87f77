#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ctxlab {

enum class ErrorCode {
  InvalidName,
  EmptyContext,
  ContextTooShort,
  DuplicateVertexInContext,
  DuplicateContext,
  IsolatedVertex,
  NonUniform,
  UnknownCatalogName,
  UnknownVertex,
  DomainMismatch,
  InvalidArgument,
  ExceedsKMax,
  SearchBudgetExceeded,
  NoAdmissibleColoring,
  NotAdmissible,
  ValueMapNotNormalized,
  ZeroVector,
  CollinearInput,
  WrongDimension,
  ScaleBudgetExceeded,
  SyntaxError,
  DuplicateDeclaration,
  DimensionMismatch,
  UnknownDirective,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ctxlab
