#pragma once

#include <stdexcept>
#include <string>

namespace zm {

enum class ErrorCode {
  domain,
  pole,
  precondition,
  near_zero,
  insufficient_cache,
  unresolved_block,
  io,
  format,
  version,
  checksum,
  invariant,
  empty,
  schema,
  evaluation,
  internal
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace zm
