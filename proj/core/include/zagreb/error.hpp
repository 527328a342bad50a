#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zagreb {

enum class ErrorCode {
  kInvalidEdge,
  kInvalidVertex,
  kInvalidArgument,
  kDisconnected,
  kTooSmall,
  kTooLarge,
  kMalformed,
  kInvalidClass,
  kPatternMismatch,
  kEmptyClass,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  // The message without the error-code prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace zagreb
