#include "zagreb/error.hpp"

namespace zagreb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidEdge:
      return "InvalidEdge";
    case ErrorCode::kInvalidVertex:
      return "InvalidVertex";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kDisconnected:
      return "Disconnected";
    case ErrorCode::kTooSmall:
      return "TooSmall";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kMalformed:
      return "Malformed";
    case ErrorCode::kInvalidClass:
      return "InvalidClass";
    case ErrorCode::kPatternMismatch:
      return "PatternMismatch";
    case ErrorCode::kEmptyClass:
      return "EmptyClass";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace zagreb
