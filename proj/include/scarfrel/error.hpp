#pragma once

#include <stdexcept>
#include <string>

namespace scarfrel {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDimensionMismatch,
  kEmptyInput,
  kNotGeneric,
  kTooLarge,
  kOverflow,
  kInvalidSpec,
  kUnreachableCutoff,
  kInternal,
};

/// Base exception for every failure raised by the library. The code maps
/// one-to-one onto the C API status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scarfrel
