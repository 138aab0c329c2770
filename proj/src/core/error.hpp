#pragma once

#include <stdexcept>
#include <string>

namespace netconics {

enum class ErrorCode {
  kInvalidInput,
  kDomain,
  kNonGeneric,
  kNumericFailure,
  kVerificationFailed,
};

/// Every failure raised by the core carries one of these codes so the C API
/// can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace netconics
