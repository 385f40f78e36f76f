#include "zetamoments/error.hpp"

namespace zm {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::pole: return "pole";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::near_zero: return "near_zero";
    case ErrorCode::insufficient_cache: return "insufficient_cache";
    case ErrorCode::unresolved_block: return "unresolved_block";
    case ErrorCode::io: return "io";
    case ErrorCode::format: return "format";
    case ErrorCode::version: return "version";
    case ErrorCode::checksum: return "checksum";
    case ErrorCode::invariant: return "invariant";
    case ErrorCode::empty: return "empty";
    case ErrorCode::schema: return "schema";
    case ErrorCode::evaluation: return "evaluation";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace zm
