#pragma once

#include <stdexcept>
#include <string>

namespace mobsamp {

enum class ErrorCode {
  OriginNotInterior,
  UnsupportedBody,
  DegenerateBody,
  EmptySet,
  TooFewPoints,
  WindowExceedsTruncation,
  ExceedsTruncation,
  NonPositiveElement,
  UnboundedContribution,
  MaskEmpty,
  MaskExceedsGrid,
  EmptyPath,
  ChordTooShort,
  FrequencyUnrepresentable,
  DeltaTooLarge,
  MissingConditionC,
  SchemaError,
  IOError,
  InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::UnsupportedBody: return "UnsupportedBody";
    case ErrorCode::DegenerateBody: return "DegenerateBody";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::WindowExceedsTruncation: return "WindowExceedsTruncation";
    case ErrorCode::ExceedsTruncation: return "ExceedsTruncation";
    case ErrorCode::NonPositiveElement: return "NonPositiveElement";
    case ErrorCode::UnboundedContribution: return "UnboundedContribution";
    case ErrorCode::MaskEmpty: return "MaskEmpty";
    case ErrorCode::MaskExceedsGrid: return "MaskExceedsGrid";
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::ChordTooShort: return "ChordTooShort";
    case ErrorCode::FrequencyUnrepresentable: return "FrequencyUnrepresentable";
    case ErrorCode::DeltaTooLarge: return "DeltaTooLarge";
    case ErrorCode::MissingConditionC: return "MissingConditionC";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All library failures surface as this exception; `code` is stable and the
// CLI maps it to exit status 3.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace mobsamp
