#include "iat/error.hpp"

namespace iat {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::Indeterminate: return "indeterminate";
    case ErrorCode::Explosive: return "explosive";
    case ErrorCode::InsufficientData: return "insufficient_data";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Io: return "io";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace iat
