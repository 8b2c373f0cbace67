#pragma once

#include <stdexcept>
#include <string>

namespace iat {

enum class ErrorCode {
  InvalidArgument = 1,
  Singular = 2,
  Indeterminate = 3,
  Explosive = 4,
  InsufficientData = 5,
  Parse = 6,
  Io = 7,
  NoConvergence = 8,
  Internal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

// All library failures surface as iat::Error; the C boundary maps the code
// onto iat_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what,
                    ErrorCode code = ErrorCode::InvalidArgument) {
  if (!cond) throw Error(code, what);
}

}  // namespace iat
