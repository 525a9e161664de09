#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace malcev {

enum class ErrorCode {
  FieldMismatch,
  ShapeError,
  NonSkewInput,
  UnverifiedAlgebra,
  UnverifiedRepresentation,
  NotAnEmbeddingTensor,
  InvalidEtRepresentation,
  NotACocycle,
  InvalidExtension,
  InvalidSplitting,
  NotNijenhuis,
  TooLarge,
  UnsupportedField,
  ParseError,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this exception; `code()` says
/// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace malcev
