#include "ctxlab/error.hpp"

namespace ctxlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::EmptyContext: return "EmptyContext";
    case ErrorCode::ContextTooShort: return "ContextTooShort";
    case ErrorCode::DuplicateVertexInContext: return "DuplicateVertexInContext";
    case ErrorCode::DuplicateContext: return "DuplicateContext";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NonUniform: return "NonUniform";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ExceedsKMax: return "ExceedsKMax";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NoAdmissibleColoring: return "NoAdmissibleColoring";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ValueMapNotNormalized: return "ValueMapNotNormalized";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::ScaleBudgetExceeded: return "ScaleBudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownDirective: return "UnknownDirective";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

}  // namespace ctxlab
