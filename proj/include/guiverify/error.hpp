#pragma once

#include <stdexcept>
#include <string>

namespace guiverify {

// Stable error codes; the names below are the ones surfaced in diagnostics
// and exit-2 messages.
enum class ErrorCode {
  MalformedDocument,
  SchemaViolation,
  EmptyScreen,
  DecodeError,
  ZeroDimension,
  DimensionMismatch,
  OutOfBounds,
  EmptyRegion,
  EmptyHistogram,
  UnknownCategory,
  VersionMismatch,
  IoError,
  TargetNotFound,
  MutationOutOfBounds,
  InsufficientTargets,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MALFORMED_DOCUMENT";
    case ErrorCode::SchemaViolation: return "SCHEMA_VIOLATION";
    case ErrorCode::EmptyScreen: return "EMPTY_SCREEN";
    case ErrorCode::DecodeError: return "DECODE_ERROR";
    case ErrorCode::ZeroDimension: return "ZERO_DIMENSION";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::OutOfBounds: return "OUT_OF_BOUNDS";
    case ErrorCode::EmptyRegion: return "EMPTY_REGION";
    case ErrorCode::EmptyHistogram: return "EMPTY_HISTOGRAM";
    case ErrorCode::UnknownCategory: return "UNKNOWN_CATEGORY";
    case ErrorCode::VersionMismatch: return "VERSION_MISMATCH";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::TargetNotFound: return "TARGET_NOT_FOUND";
    case ErrorCode::MutationOutOfBounds: return "MUTATION_OUT_OF_BOUNDS";
    case ErrorCode::InsufficientTargets: return "INSUFFICIENT_TARGETS";
  }
  return "UNKNOWN_ERROR";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace guiverify
