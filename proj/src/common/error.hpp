#pragma once

#include <stdexcept>
#include <string>

namespace f2s {

// Mirrors f2s_status in the C header; keep the numeric values in sync.
enum class ErrorCode : int {
  InvalidArgument = 1,
  UnknownSpec = 2,
  DimensionMismatch = 3,
  Parse = 4,
  Io = 5,
  Numeric = 6,
  LimitExceeded = 7,
  Internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace f2s
