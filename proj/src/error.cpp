#include "malcev/error.hpp"

namespace malcev {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NonSkewInput: return "NonSkewInput";
    case ErrorCode::UnverifiedAlgebra: return "UnverifiedAlgebra";
    case ErrorCode::UnverifiedRepresentation: return "UnverifiedRepresentation";
    case ErrorCode::NotAnEmbeddingTensor: return "NotAnEmbeddingTensor";
    case ErrorCode::InvalidEtRepresentation: return "InvalidEtRepresentation";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::InvalidExtension: return "InvalidExtension";
    case ErrorCode::InvalidSplitting: return "InvalidSplitting";
    case ErrorCode::NotNijenhuis: return "NotNijenhuis";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace malcev
