#pragma once

#include <stdexcept>
#include <string>

namespace elab {

// Error categories shared between the C++ core and the C API status codes.
enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  RankDeficient = 3,
  NonStationary = 4,
  DegenerateEquilibrium = 5,
  Instability = 6,
  Pole = 7,
  TooShort = 8,
  Io = 9,
  UnknownId = 10,
  Internal = 11,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace elab
