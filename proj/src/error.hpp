#pragma once

#include <stdexcept>
#include <string>

namespace fm {

// Mirrors fm_status in the C header; keep the numbering in sync.
enum class ErrorCode {
  Ok = 0,
  InvalidArgument = 1,
  Parse = 2,
  DimensionMismatch = 3,
  NotDivisible = 4,
  Domain = 5,
  Numeric = 6,
  Limit = 7,
  Degenerate = 8,
  Internal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fm
